"""Exact decision procedures: containment, coloring, criticality.

Complete-split containment is specialized to "p-clique with at least q
common outside neighbors" because it is the inner loop of enumeration; the
generic backtracking subgraph oracle below exists to cross-check it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .graphs import Graph, bits


@dataclass(frozen=True)
class ColoringResult:
    """Exact chromatic number with a certifying proper coloring."""

    chi: int
    coloring: tuple[int, ...]


@dataclass(frozen=True)
class ContainmentWitness:
    """An embedded complete split subgraph: a clique plus its apex vertices."""

    clique_vertices: tuple[int, ...]
    apex_vertices: tuple[int, ...]


def iter_k_cliques(rows: Sequence[int], k: int, within: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield every k-clique (ascending tuples) with all vertices in `within`."""
    n = len(rows)
    cand0 = (1 << n) - 1 if within is None else within
    if k == 0:
        yield ()
        return

    def rec(prefix: tuple[int, ...], cand: int) -> Iterator[tuple[int, ...]]:
        need = k - len(prefix)
        if need == 0:
            yield prefix
            return
        mask = cand
        while mask:
            b = mask & -mask
            mask ^= b
            if mask.bit_count() + 1 < need:
                return
            v = b.bit_length() - 1
            nxt = mask & rows[v]
            if nxt.bit_count() >= need - 1:
                yield from rec(prefix + (v,), nxt)

    yield from rec((), cand0)


def contains_complete_split(g: Graph, p: int, q: int) -> Optional[ContainmentWitness]:
    """Witness that g contains a p-clique with >= q common outside neighbors.

    The apex vertices need not be independent in g: the pattern is sought as
    an ordinary subgraph, so extra edges among apexes are irrelevant.
    Returns None iff g is free of the pattern.
    """
    if p < 2:
        raise ValueError(f"clique size p must be >= 2, got {p}")
    if q < 1:
        raise ValueError(f"apex count q must be >= 1, got {q}")
    for clique in iter_k_cliques(g.adj, p):
        common = (1 << g.n) - 1
        mask = 0
        for v in clique:
            common &= g.adj[v]
            mask |= 1 << v
        common &= ~mask
        if common.bit_count() >= q:
            apexes = []
            for v in bits(common):
                apexes.append(v)
                if len(apexes) == q:
                    break
            return ContainmentWitness(clique, tuple(apexes))
    return None


def contains_clique(g: Graph, k: int) -> Optional[tuple[int, ...]]:
    """A k-clique of g, or None.  Reduces to split containment for k >= 3."""
    if k < 1:
        raise ValueError(f"clique size must be >= 1, got {k}")
    if k == 1:
        return (0,)
    if k == 2:
        for v in range(g.n):
            if g.adj[v]:
                return (v, (g.adj[v] & -g.adj[v]).bit_length() - 1)
        return None
    witness = contains_complete_split(g, k - 1, 1)
    if witness is None:
        return None
    return tuple(sorted(witness.clique_vertices + witness.apex_vertices[:1]))


def _greedy_coloring_bound(rows: Sequence[int], n: int) -> int:
    colors = [0] * n
    chi = 1
    for v in range(n):
        forb = 0
        for u in bits(rows[v] & ((1 << v) - 1)):
            forb |= 1 << colors[u]
        c = 0
        while forb >> c & 1:
            c += 1
        colors[v] = c
        chi = max(chi, c + 1)
    return chi


def _greedy_clique_bound(rows: Sequence[int], n: int) -> int:
    best = 1
    for start in range(n):
        cand = rows[start]
        size = 1
        while cand:
            u = (cand & -cand).bit_length() - 1
            size += 1
            cand &= rows[u]
        if size > best:
            best = size
    return best


def _color_with(rows: Sequence[int], n: int, k: int) -> Optional[list[int]]:
    """First proper k-coloring in lexicographic order (vertices by index,
    colors ascending, new colors introduced in order), or None."""
    if k >= n:
        return list(range(n))
    colors = [-1] * n

    def rec(v: int, used: int) -> bool:
        if v == n:
            return True
        forb = 0
        for u in bits(rows[v] & ((1 << v) - 1)):
            forb |= 1 << colors[u]
        limit = min(k - 1, used)
        for c in range(limit + 1):
            if forb >> c & 1:
                continue
            colors[v] = c
            if rec(v + 1, max(used, c + 1)):
                return True
        colors[v] = -1
        return False

    return colors if rec(0, 0) else None


def chromatic_number(g: Graph) -> ColoringResult:
    """Exact chromatic number, certified by exhausted search below it.

    Deterministic: the returned coloring is the first one found with vertices
    in index order and colors tried ascending.
    """
    lower = _greedy_clique_bound(g.adj, g.n)
    upper = _greedy_coloring_bound(g.adj, g.n)
    chi = upper
    for k in range(lower, upper):
        if _color_with(g.adj, g.n, k) is not None:
            chi = k
            break
    coloring = _color_with(g.adj, g.n, chi)
    assert coloring is not None
    return ColoringResult(chi, tuple(coloring))


def is_k_partite(g: Graph, k: int) -> bool:
    """True iff g admits a proper coloring with at most k classes."""
    if k < 1:
        raise ValueError(f"class count must be >= 1, got {k}")
    return _color_with(g.adj, g.n, k) is not None


def is_edge_color_critical(g: Graph) -> bool:
    """True iff deleting some single edge lowers the chromatic number."""
    if g.m == 0:
        raise ValueError("edge-color-criticality is undefined for edgeless graphs")
    chi = chromatic_number(g).chi
    rows = list(g.adj)
    for u, v in g.edges():
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        drops = _color_with(rows, g.n, chi - 1) is not None
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        if drops:
            return True
    return False


def intersection_lower_bound(sizes: Sequence[int], union_size: int) -> int:
    """Lower bound sum |S_i| - (k-1)|union| on the size of a k-way intersection.

    May be negative, in which case the bound is vacuous.
    """
    if not sizes:
        raise ValueError("need at least one set size")
    if any(s < 0 for s in sizes):
        raise ValueError("set sizes must be nonnegative")
    if union_size < max(sizes):
        raise ValueError("union cannot be smaller than the largest set")
    return sum(sizes) - (len(sizes) - 1) * union_size


def contains_subgraph(g: Graph, pattern: Graph) -> Optional[tuple[int, ...]]:
    """Generic backtracking subgraph embedding: pattern vertex i -> result[i].

    Ordinary (not induced) containment; retained as the independent
    cross-check for the specialized split oracle.
    """
    if pattern.n > g.n:
        return None
    order = sorted(range(pattern.n), key=lambda v: (-pattern.degree(v), v))
    mapping = [-1] * pattern.n
    full = (1 << g.n) - 1

    def rec(i: int, used: int) -> bool:
        if i == pattern.n:
            return True
        pv = order[i]
        cand = full & ~used
        for pu in bits(pattern.adj[pv]):
            if mapping[pu] != -1:
                cand &= g.adj[mapping[pu]]
        want = pattern.degree(pv)
        for gv in bits(cand):
            if g.adj[gv].bit_count() < want:
                continue
            mapping[pv] = gv
            if rec(i + 1, used | 1 << gv):
                return True
            mapping[pv] = -1
        return False

    return tuple(mapping) if rec(0, 0) else None
