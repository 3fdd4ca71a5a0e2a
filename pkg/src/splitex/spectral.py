"""Certified spectral radius, exact comparison, classical bound checks,
and the edge-rotation move.

Power iteration runs on A + I restricted to each connected component (the
shift defeats the +/-rho oscillation on bipartite pieces; A + I on a
connected component is primitive, so the iteration converges).  Bounds are
the min/max Collatz-Wielandt ratios of a positive iterate together with the
Rayleigh quotient, inflated by a standard floating-point summation bound,
so the returned interval genuinely contains the true value.  Near-ties are
never decided in floating point: compare_rho falls back to exact integer
characteristic polynomials.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import PrecisionError, UndecidableComparisonError
from .exactpoly import char_poly, compare_max_roots
from .graphs import Graph, add_edges, bits, remove_edges

DEFAULT_TOL = 1e-12
ITERATION_CAP = 10 ** 6
EXACT_COMPARE_CAP = 16
_UNIT_ROUNDOFF = 1.2e-16  # 2^-53 with a little headroom


class Ordering(enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"


@dataclass(frozen=True)
class SpectralResult:
    """Spectral radius estimate with certified error radius and Perron vector.

    The true radius lies in [rho - err, rho + err].  perron is unit
    2-norm, nonnegative, and supported on a component attaining the radius.
    """

    rho: float
    err: float
    perron: tuple[float, ...]


@dataclass(frozen=True)
class RotationSpec:
    """Move all edges from v to its private neighbors over to u."""

    u: int
    v: int
    private_neighbors: frozenset[int]

    def validate(self, g: Graph) -> None:
        if self.u == self.v:
            raise ValueError("rotation endpoints must differ")
        for w in (self.u, self.v):
            if not 0 <= w < g.n:
                raise ValueError(f"vertex {w} not in 0..{g.n - 1}")
        if not self.private_neighbors:
            raise ValueError("rotation requires at least one private neighbor")
        for w in self.private_neighbors:
            if w == self.u:
                raise ValueError("a private neighbor cannot be the receiving vertex")
            if not g.has_edge(self.v, w):
                raise ValueError(f"{w} is not a neighbor of {self.v}")
            if g.has_edge(self.u, w):
                raise ValueError(f"{w} is already a neighbor of {self.u}")


def _component_bounds(sub: np.ndarray, tol: float) -> tuple[float, float, np.ndarray]:
    """Certified [lo, hi] for the spectral radius of one connected component."""
    k = sub.shape[0]
    if k == 1:
        return 0.0, 0.0, np.ones(1)
    shifted = sub + np.eye(k)
    x = np.ones(k) / np.sqrt(k)
    # converge to a quarter of the budget: the returned iterate is one step
    # ahead of the measured ratio window, and on disconnected input the
    # midpoint shifts within the merged interval, so halve twice
    target = tol / 4
    lo = hi = 0.0
    for _ in range(ITERATION_CAP):
        y = shifted @ x
        ratios = y / x
        gamma = 1.03 * k * _UNIT_ROUNDOFF
        slack = 2 * gamma * float(ratios.max())
        rayleigh = float(x @ y) / float(x @ x) - 1.0
        lo = max(float(ratios.min()) - 1.0, rayleigh - slack) - slack
        hi = float(ratios.max()) - 1.0 + slack
        x = y / np.linalg.norm(y)
        if hi - lo <= target:
            return lo, hi, x
        if not np.all(x > 0):
            raise PrecisionError("iterate lost positivity", best_err=(hi - lo) / 2)
    raise PrecisionError(
        f"power iteration did not reach tol={tol} within {ITERATION_CAP} iterations",
        best_err=(hi - lo) / 2,
    )


def spectral_radius(g: Graph, tol: float = DEFAULT_TOL) -> SpectralResult:
    """Spectral radius with certified error at most tol.

    On disconnected input the radius is the max over components and the
    Perron vector is supported on a component attaining it.
    """
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    dense = np.zeros((g.n, g.n))
    for v in range(g.n):
        for u in bits(g.adj[v]):
            dense[v, u] = 1.0
    per_comp = []
    for comp in g.components():
        idx = list(bits(comp))
        per_comp.append((*_component_bounds(dense[np.ix_(idx, idx)], tol), idx))
    lo = max(c[0] for c in per_comp)
    hi = max(c[1] for c in per_comp)
    _, _, x, idx = max(per_comp, key=lambda c: c[1])
    rho = (lo + hi) / 2
    perron = np.zeros(g.n)
    perron[idx] = x
    residual = float(np.max(np.abs(dense @ perron - rho * perron)))
    gamma = 1.03 * g.n * _UNIT_ROUNDOFF
    err = max((hi - lo) / 2, residual + gamma * (abs(rho) + 1.0))
    if err > tol:
        raise PrecisionError(f"achieved err={err} exceeds tol={tol}", best_err=err)
    return SpectralResult(rho=rho, err=err, perron=tuple(float(t) for t in perron))


def compare_rho(g1: Graph, g2: Graph) -> Ordering:
    """Order two graphs by spectral radius; never declares equality from floats.

    Refines the certified intervals, then falls back to exact integer
    characteristic-polynomial comparison (n <= 16 each).
    """
    if g1.n < 1 or g2.n < 1:
        raise ValueError("both graphs must be nonempty")
    if g1 == g2:
        return Ordering.EQUAL
    for tol in (1e-9, DEFAULT_TOL):
        try:
            r1 = spectral_radius(g1, tol)
            r2 = spectral_radius(g2, tol)
        except PrecisionError:
            break
        if r1.rho - r1.err > r2.rho + r2.err:
            return Ordering.GREATER
        if r1.rho + r1.err < r2.rho - r2.err:
            return Ordering.LESS
    if g1.n > EXACT_COMPARE_CAP or g2.n > EXACT_COMPARE_CAP:
        raise UndecidableComparisonError(
            f"intervals overlap and the exact path is capped at {EXACT_COMPARE_CAP} vertices"
        )
    result = compare_max_roots(char_poly(g1), char_poly(g2))
    return {1: Ordering.GREATER, 0: Ordering.EQUAL, -1: Ordering.LESS}[result]


@dataclass(frozen=True)
class BoundReport:
    """Outcome of checking rho(G) against a closed-form or reference bound."""

    name: str
    rho: float
    err: float
    bound: float
    holds: bool
    slack: float
    equality_candidate: bool = False
    exact_order: Optional[Ordering] = None


def check_nosal(g: Graph, tol: float = 1e-10) -> BoundReport:
    """rho <= sqrt(m) on triangle-free graphs."""
    from .oracles import contains_clique

    if contains_clique(g, 3) is not None:
        raise ValueError("Nosal bound requires a triangle-free graph")
    res = spectral_radius(g, tol)
    bound = float(np.sqrt(g.m))
    return BoundReport(
        name="nosal", rho=res.rho, err=res.err, bound=bound,
        holds=res.rho - res.err <= bound, slack=bound - res.rho,
    )


def check_wilf(g: Graph, r: int, tol: float = 1e-10) -> BoundReport:
    """rho <= (1 - 1/r) n on K_{r+1}-free graphs."""
    from .oracles import contains_clique

    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    if contains_clique(g, r + 1) is not None:
        raise ValueError(f"Wilf bound requires a K_{r + 1}-free graph")
    res = spectral_radius(g, tol)
    bound = (1 - 1 / r) * g.n
    return BoundReport(
        name="wilf", rho=res.rho, err=res.err, bound=bound,
        holds=res.rho - res.err <= bound, slack=bound - res.rho,
    )


def check_spectral_turan(g: Graph, r: int, tol: float = 1e-10) -> BoundReport:
    """rho(G) <= rho(T_{n,r}) on K_{r+1}-free graphs, equality only at the
    balanced complete multipartite graph itself (resolved exactly when the
    intervals overlap)."""
    from .constructions import turan
    from .oracles import contains_clique

    if contains_clique(g, r + 1) is not None:
        raise ValueError(f"spectral Turan bound requires a K_{r + 1}-free graph")
    t_graph, _ = turan(g.n, r)
    res = spectral_radius(g, tol)
    ref = spectral_radius(t_graph, tol)
    holds = res.rho - res.err <= ref.rho + ref.err
    candidate = res.rho + res.err >= ref.rho - ref.err
    exact = None
    if candidate and g.n <= EXACT_COMPARE_CAP:
        exact = compare_rho(g, t_graph)
        holds = exact in (Ordering.LESS, Ordering.EQUAL)
    return BoundReport(
        name="spectral_turan", rho=res.rho, err=res.err, bound=ref.rho,
        holds=holds, slack=ref.rho - res.rho,
        equality_candidate=candidate, exact_order=exact,
    )


def rotate_edges(g: Graph, spec: RotationSpec) -> Graph:
    """Delete v-w and add u-w for every listed private neighbor w."""
    spec.validate(g)
    pairs = [(spec.v, w) for w in sorted(spec.private_neighbors)]
    stripped = remove_edges(g, pairs)
    return add_edges(stripped, [(spec.u, w) for w in sorted(spec.private_neighbors)])


def _walk_tied(g: Graph, u: int, v: int) -> bool:
    """Exact certificate that two Perron entries coincide: equal counts of
    walks of every length up to n-1 (equal forever by Cayley-Hamilton, hence
    equal in the power-iteration limit).  Sufficient, not necessary."""
    vec = [1] * g.n
    for _ in range(g.n - 1):
        if vec[u] != vec[v]:
            return False
        vec = [sum(vec[w] for w in bits(g.adj[t])) for t in range(g.n)]
    return vec[u] == vec[v]


def verify_rotation_lemma(g: Graph, spec: RotationSpec, tol: float = DEFAULT_TOL) -> Optional[bool]:
    """Check that rotating strictly increases the spectral radius.

    Requires g connected and Perron weight x_u >= x_v.  When the two Perron
    entries cannot be separated at the working precision, an exact integer
    walk-count certificate decides whether they are genuinely tied; if the
    tie cannot be certified either, returns None (indeterminate, distinct
    from False).
    """
    if not g.is_connected():
        raise ValueError("the rotation lemma assumes a connected graph")
    spec.validate(g)
    res = spectral_radius(g, tol)
    xu, xv = res.perron[spec.u], res.perron[spec.v]
    margin = max(1e-9, 10 * res.err)
    if xu < xv - margin:
        raise ValueError(
            f"Perron weight of receiving vertex is below the donor ({xu} < {xv})"
        )
    if abs(xu - xv) <= margin:
        if not _walk_tied(g, spec.u, spec.v):
            return None  # tie not certifiable at this precision
    rotated = rotate_edges(g, spec)
    try:
        return compare_rho(rotated, g) is Ordering.GREATER
    except UndecidableComparisonError:
        return None
