"""Exact spectral-radius comparison via integer characteristic polynomials.

Characteristic polynomials come from the Faddeev-LeVerrier recurrence over
Python ints (every division in it is exact), and largest roots are compared
with Sturm-chain root isolation over rationals.  Equality is decided by a
gcd certificate: once each largest root is isolated alone in an interval,
a shared root of both polynomials inside the overlap forces equality.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .graphs import Graph

# Coefficient lists are low-to-high: poly[i] is the coefficient of x**i.


def char_poly(g: Graph) -> list[int]:
    """Monic characteristic polynomial of the adjacency matrix, exact."""
    n = g.n
    a = [[g.adj[i] >> j & 1 for j in range(n)] for i in range(n)]
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    for k in range(1, n + 1):
        am = [[sum(a[i][t] * m[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        trace = sum(am[i][i] for i in range(n))
        ck, rem = divmod(-trace, k)
        assert rem == 0, "Faddeev-LeVerrier division must be exact"
        coeffs[n - k] = ck
        if k < n:
            m = [[am[i][j] + (ck if i == j else 0) for j in range(n)] for i in range(n)]
    return coeffs


def _trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _deriv(p: Sequence[Fraction]) -> list[Fraction]:
    return [p[i] * i for i in range(1, len(p))]


def _rem(p: Sequence[Fraction], q: Sequence[Fraction]) -> list[Fraction]:
    p = list(p)
    dq = len(q) - 1
    while len(p) - 1 >= dq and _trim(p):
        shift = len(p) - 1 - dq
        factor = p[-1] / q[-1]
        for i in range(dq + 1):
            p[shift + i] -= factor * q[i]
        p.pop()
        _trim(p)
    return p


def _gcd(p: Sequence[Fraction], q: Sequence[Fraction]) -> list[Fraction]:
    p, q = list(p), list(q)
    while _trim(q):
        p, q = q, _rem(p, q)
    if p:
        lead = p[-1]
        p = [c / lead for c in p]
    return p


def _eval(p: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _deflate(p: list[Fraction], root: Fraction) -> list[Fraction]:
    """Divide out (x - root); the division is exact when root is a root."""
    out = [Fraction(0)] * (len(p) - 1)
    carry = p[-1]
    for i in range(len(p) - 2, -1, -1):
        out[i] = carry
        carry = p[i] + carry * root
    assert carry == 0
    return out


def squarefree_part(p: Sequence[int | Fraction]) -> list[Fraction]:
    pf = _trim([Fraction(c) for c in p])
    if len(pf) <= 1:
        return pf
    g = _gcd(pf, _deriv(pf))
    if len(g) <= 1:
        return [c / pf[-1] for c in pf]
    q, r = _divmod(pf, g)
    assert not _trim(r)
    lead = q[-1]
    return [c / lead for c in q]


def _divmod(p: Sequence[Fraction], q: Sequence[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    p = list(p)
    dq = len(q) - 1
    quot = [Fraction(0)] * max(len(p) - dq, 1)
    while len(p) - 1 >= dq and _trim(p):
        shift = len(p) - 1 - dq
        factor = p[-1] / q[-1]
        quot[shift] = factor
        for i in range(dq + 1):
            p[shift + i] -= factor * q[i]
        p.pop()
        _trim(p)
    return _trim(quot), p


def _sturm_chain(p: list[Fraction]) -> list[list[Fraction]]:
    chain = [p, _trim(_deriv(p))]
    while chain[-1]:
        nxt = [-c for c in _rem(chain[-2], chain[-1])]
        if not _trim(nxt):
            break
        chain.append(nxt)
    return chain


def _sign_changes_at(chain: list[list[Fraction]], x: Fraction) -> int:
    signs = []
    for p in chain:
        v = _eval(p, x)
        if v:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _sign_changes_at_inf(chain: list[list[Fraction]]) -> int:
    signs = []
    for p in chain:
        if p:
            signs.append(1 if p[-1] > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


class _RootCounter:
    """Counts distinct real roots of a squarefree polynomial above a rational."""

    def __init__(self, p: list[Fraction]):
        self.p = p
        self.chain = _sturm_chain(p)
        self.at_inf = _sign_changes_at_inf(self.chain)

    def count_gt(self, t: Fraction) -> int:
        p = self.p
        while _eval(p, t) == 0:
            p = _deflate(p, t)
        if p is not self.p:
            chain = _sturm_chain(p)
            return _sign_changes_at(chain, t) - _sign_changes_at_inf(chain)
        return _sign_changes_at(self.chain, t) - self.at_inf

    def count_in(self, lo: Fraction, hi: Fraction) -> int:
        return self.count_gt(lo) - self.count_gt(hi)


def _cauchy_bound(p: Sequence[Fraction]) -> Fraction:
    lead = abs(p[-1])
    return 1 + max(abs(c) for c in p) / lead


def _isolate_max_root(counter: _RootCounter) -> tuple[Fraction, Fraction]:
    """Interval (a, b] containing exactly the largest real root."""
    bound = _cauchy_bound(counter.p)
    a, b = -bound, bound
    cnt = counter.count_gt(a)
    if cnt == 0:
        raise ValueError("polynomial has no real roots")
    while cnt != 1:
        mid = (a + b) / 2
        c = counter.count_gt(mid)
        if c >= 1:
            a, cnt = mid, c
        else:
            b = mid
    return a, b


def compare_max_roots(p1: Sequence[int], p2: Sequence[int]) -> int:
    """Exact comparison of largest real roots: -1, 0, or +1.

    Both polynomials must have at least one real root (always true for
    characteristic polynomials of symmetric matrices).
    """
    sf1 = squarefree_part(p1)
    sf2 = squarefree_part(p2)
    if sf1 == sf2:
        return 0
    c1 = _RootCounter(sf1)
    c2 = _RootCounter(sf2)
    a1, b1 = _isolate_max_root(c1)
    a2, b2 = _isolate_max_root(c2)
    common = _gcd(sf1, sf2)
    common_counter = _RootCounter(common) if len(common) > 1 else None
    while True:
        if b2 <= a1:
            return 1
        if b1 <= a2:
            return -1
        lo, hi = max(a1, a2), min(b1, b2)
        if common_counter is not None and common_counter.count_in(lo, hi) >= 1:
            return 0
        mid1 = (a1 + b1) / 2
        if c1.count_gt(mid1) == 1:
            a1 = mid1
        else:
            b1 = mid1
        mid2 = (a2 + b2) / 2
        if c2.count_gt(mid2) == 1:
            a2 = mid2
        else:
            b2 = mid2


def max_root_interval(p: Sequence[int], width: Fraction) -> tuple[Fraction, Fraction]:
    """Rational interval of at most the given width around the largest real root."""
    counter = _RootCounter(squarefree_part(p))
    a, b = _isolate_max_root(counter)
    while b - a > width:
        mid = (a + b) / 2
        if counter.count_gt(mid) == 1:
            a = mid
        else:
            b = mid
    return a, b
