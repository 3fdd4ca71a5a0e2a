"""Deterministic builders for the named graph families under study.

All builders lay vertices out in contiguous class blocks so that two calls
with equal parameters are label-identical, which golden tests rely on.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, VertexPartition, bits, complete_graph, empty_graph, join


@dataclass(frozen=True)
class SplitParams:
    """Parameters of a complete split graph: a p-clique joined to q independent vertices."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 2:
            raise ValueError(f"clique size p must be >= 2, got {self.p}")
        if self.q < 1:
            raise ValueError(f"independent-set size q must be >= 1, got {self.q}")


@dataclass(frozen=True)
class YGraphSpec:
    """Layout of y_graph(n, p): balanced part sizes plus the three special vertices.

    Parts occupy contiguous blocks of 0..n-2 in part_sizes order; u0 is the
    added apex vertex n-1, u1 sits in the first (smallest) part and u2 in the
    second.
    """

    n: int
    p: int
    part_sizes: tuple[int, ...]
    u0: int
    u1: int
    u2: int

    @property
    def classes(self) -> tuple[tuple[int, ...], ...]:
        out = []
        start = 0
        for size in self.part_sizes:
            out.append(tuple(range(start, start + size)))
            start += size
        return tuple(out)


def balanced_part_sizes(n: int, r: int) -> tuple[int, ...]:
    """Sizes of the balanced partition of n into r parts, nondecreasing."""
    small, extra = divmod(n, r)
    return (small,) * (r - extra) + (small + 1,) * extra


def turan(n: int, r: int) -> tuple[Graph, VertexPartition]:
    """Complete r-partite graph on n vertices with parts as equal as possible."""
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= n, got r={r}, n={n}")
    sizes = balanced_part_sizes(n, r)
    classes = []
    start = 0
    for size in sizes:
        classes.append(tuple(range(start, start + size)))
        start += size
    parts = VertexPartition(tuple(classes), covers=True)
    full = (1 << n) - 1
    rows = [0] * n
    for mask in parts.class_masks():
        others = full & ~mask
        for v in bits(mask):
            rows[v] = others
    return Graph(n, rows), parts


def complete_split(p: int, q: int) -> Graph:
    """Join of a p-clique with q independent vertices (the generalized book)."""
    SplitParams(p, q)
    return join(complete_graph(p), empty_graph(q))


def y_graph(n: int, p: int) -> tuple[Graph, YGraphSpec]:
    """Balanced complete p-partite graph on n-1 vertices with one cross edge
    u1u2 removed and a new apex u0 joined to every part except the first two,
    plus u1 and u2.

    Requires n >= 2p + 1 so every part has at least two vertices and the
    result is genuinely non-p-partite.
    """
    if p < 2:
        raise ValueError(f"part count p must be >= 2, got {p}")
    if n < 2 * p + 1:
        raise ValueError(f"need n >= 2p + 1 = {2 * p + 1}, got n={n}")
    base, parts = turan(n - 1, p)
    sizes = parts.sizes
    u0 = n - 1
    u1 = parts.classes[0][0]
    u2 = parts.classes[1][0]
    rows = list(base.adj)
    rows.append(0)
    rows[u1] &= ~(1 << u2)
    rows[u2] &= ~(1 << u1)
    apex_targets = [u1, u2]
    for cls in parts.classes[2:]:
        apex_targets.extend(cls)
    for v in apex_targets:
        rows[u0] |= 1 << v
        rows[v] |= 1 << u0
    spec = YGraphSpec(n=n, p=p, part_sizes=sizes, u0=u0, u1=u1, u2=u2)
    return Graph(n, rows), spec


def g_ij(classes, i: int, j: int, u_i: int, u_j: int) -> Graph:
    """Y-type rewiring over arbitrary color classes.

    classes must partition all but exactly one vertex of 0..n-1; the missing
    vertex plays the apex role u0.  Builds the complete multipartite graph on
    the classes, deletes the cross edge u_i u_j, and joins u0 to every vertex
    outside classes i and j plus u_i and u_j.
    """
    parts = VertexPartition(tuple(tuple(c) for c in classes))
    p = len(parts.classes)
    if p < 2:
        raise ValueError(f"need at least 2 classes, got {p}")
    for cls in parts.classes:
        if not cls:
            raise ValueError("classes must be nonempty")
    if i == j:
        raise ValueError("class indices i and j must differ")
    if not (0 <= i < p and 0 <= j < p):
        raise ValueError(f"class index out of range for {p} classes")
    if u_i not in parts.classes[i]:
        raise ValueError(f"vertex {u_i} is not in class {i}")
    if u_j not in parts.classes[j]:
        raise ValueError(f"vertex {u_j} is not in class {j}")
    covered = parts.union_mask()
    n = covered.bit_count() + 1
    missing = ((1 << n) - 1) & ~covered
    if missing.bit_count() != 1:
        raise ValueError("classes must cover all but exactly one vertex of 0..n-1")
    u0 = missing.bit_length() - 1

    masks = parts.class_masks()
    rows = [0] * n
    for a, mask in enumerate(masks):
        others = (covered & ~mask)
        for v in bits(mask):
            rows[v] = others
    rows[u_i] &= ~(1 << u_j)
    rows[u_j] &= ~(1 << u_i)
    apex = 1 << u_i | 1 << u_j
    for a, mask in enumerate(masks):
        if a not in (i, j):
            apex |= mask
    rows[u0] = apex
    for v in bits(apex):
        rows[v] |= 1 << u0
    return Graph(n, rows)
