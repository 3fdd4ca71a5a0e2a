"""Canonical labeling by maximum adjacency code.

The code of a labeled graph is its upper triangle read column by column
(same bit order as graph6), packed MSB-first into one int; the canonical
form is the labeling maximizing that code.  The maximum code has the
prefix property (dropping the last vertex of a maximum-code graph leaves a
maximum-code graph), which is what lets the enumerator accept a child graph
purely locally: a child is kept iff it is its own canonical form.

Branch-and-bound over vertex placements, pruned two ways: columns below the
incumbent are abandoned (lexicographic comparison is decided at the first
differing column), and at each node only one representative per twin class
is expanded (swapping twins is an automorphism fixing everything else).
"""

from __future__ import annotations

from typing import Sequence

from .graphs import Graph, bits, encode_graph6


def labeled_code(rows: Sequence[int], n: int) -> int:
    """Adjacency code of the graph as labeled."""
    acc = 0
    for col in range(1, n):
        for row in range(col):
            acc = acc << 1 | (rows[row] >> col & 1)
    return acc


def is_max_code(rows: Sequence[int], n: int) -> bool:
    """True iff no relabeling produces a strictly larger adjacency code."""
    if n <= 2:
        return True
    if any(rows) and not (rows[0] >> 1 & 1):
        return False  # any edge can be relabeled to position (0, 1)
    target = []
    for k in range(n):
        col = 0
        rk = 1 << k
        for i in range(k):
            col = col << 1 | (1 if rows[i] & rk else 0)
        target.append(col)
    closed = [rows[v] | (1 << v) for v in range(n)]

    def exceeds(level: int, remaining: int, cols: list[int]) -> bool:
        if level == n:
            return False
        tcol = target[level]
        best = -1
        mask = remaining
        while mask:
            b = mask & -mask
            mask ^= b
            c = cols[b.bit_length() - 1]
            if c > best:
                best = c
        if best != tcol:
            return best > tcol
        tried_open: list[int] = []
        tried_closed: list[int] = []
        mask = remaining
        while mask:
            b = mask & -mask
            mask ^= b
            r = b.bit_length() - 1
            if cols[r] != tcol:
                continue
            row_r = rows[r]
            closed_r = closed[r]
            twin = False
            for i in range(len(tried_open)):
                if row_r == tried_open[i] or closed_r == tried_closed[i]:
                    twin = True
                    break
            if twin:
                continue
            tried_open.append(row_r)
            tried_closed.append(closed_r)
            rem2 = remaining ^ b
            cols2 = cols.copy()
            m2 = rem2
            while m2:
                b2 = m2 & -m2
                m2 ^= b2
                s = b2.bit_length() - 1
                cols2[s] = cols2[s] << 1 | (1 if row_r & b2 else 0)
            if exceeds(level + 1, rem2, cols2):
                return True
        return False

    return not exceeds(0, (1 << n) - 1, [0] * n)


def canonical_form(rows: Sequence[int], n: int) -> tuple[int, tuple[int, ...]]:
    """Maximum adjacency code and one vertex order attaining it.

    Exact breadth-first beam: every partial placement matching the best
    column sequence so far is kept (modulo twin pruning), so the result is
    the true maximum, not a heuristic.
    """
    if n == 1:
        return 0, (0,)
    closed = [rows[v] | (1 << v) for v in range(n)]
    full = (1 << n) - 1
    branches: list[tuple[tuple[int, ...], int, list[int]]] = [((), full, [0] * n)]
    acc = 0
    for level in range(n):
        best = -1
        for _, remaining, cols in branches:
            for r in bits(remaining):
                if cols[r] > best:
                    best = cols[r]
        nxt: list[tuple[tuple[int, ...], int, list[int]]] = []
        for placed, remaining, cols in branches:
            tried: list[int] = []
            for r in bits(remaining):
                if cols[r] != best:
                    continue
                if any(rows[r] == rows[t] or closed[r] == closed[t] for t in tried):
                    continue
                tried.append(r)
                rem2 = remaining ^ (1 << r)
                row_r = rows[r]
                cols2 = cols.copy()
                for s in bits(rem2):
                    cols2[s] = cols2[s] << 1 | (row_r >> s & 1)
                nxt.append((placed + (r,), rem2, cols2))
        if level:
            acc = (acc << level) | best
        branches = nxt
    return acc, branches[0][0]


def certificate(g: Graph) -> tuple[int, int]:
    """Isomorphism-invariant key: (n, canonical code)."""
    code, _ = canonical_form(g.adj, g.n)
    return g.n, code


def canonical_graph(g: Graph) -> Graph:
    """Relabel g into its canonical form."""
    _, perm = canonical_form(g.adj, g.n)
    rows = [0] * g.n
    for i, v in enumerate(perm):
        for j, u in enumerate(perm):
            if g.adj[v] >> u & 1:
                rows[i] |= 1 << j
    return Graph(g.n, rows)


def canonical_graph6(g: Graph) -> str:
    return encode_graph6(canonical_graph(g))


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    return g1.n == g2.n and certificate(g1) == certificate(g2)


def automorphism_fixing(g: Graph, constraints: dict[int, int]) -> tuple[int, ...] | None:
    """An automorphism of g mapping each constrained vertex as required, or None."""
    n = g.n
    degs = [g.degree(v) for v in range(n)]
    image = [-1] * n
    used = 0
    for src, dst in constraints.items():
        if not (0 <= src < n and 0 <= dst < n):
            raise ValueError("constraint vertex out of range")
        if degs[src] != degs[dst]:
            return None
        if used >> dst & 1:
            return None
        image[src] = dst
        used |= 1 << dst

    order = sorted(range(n), key=lambda v: (image[v] == -1, v))

    def rec(i: int, used: int) -> bool:
        if i == n:
            return True
        v = order[i]
        if image[v] != -1:
            cand_mask = 1 << image[v]
        else:
            cand_mask = ((1 << n) - 1) & ~used
        for c in bits(cand_mask):
            if degs[c] != degs[v]:
                continue
            ok = True
            for j in range(i):
                w = order[j]
                if (g.adj[v] >> w & 1) != (g.adj[c] >> image[w] & 1):
                    ok = False
                    break
            if ok:
                image[v] = c
                if rec(i + 1, used | 1 << c):
                    return True
                if v not in constraints:
                    image[v] = -1
        return False

    if rec(0, used):
        return tuple(image)
    return None
