"""Immutable simple graphs on labeled vertices 0..n-1 with bitset adjacency.

Each vertex's neighborhood is a Python int used as a bitset, so n is capped
at 64: one machine word per row keeps every downstream loop branch-free, and
anything larger fails loudly instead of silently switching representation.
Also holds the bit-exact graph6 codec used for witness interchange.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import CapacityError, Graph6ParseError

MAX_VERTICES = 64


def bits(x: int) -> Iterator[int]:
    """Yield the set bit positions of x in ascending order."""
    while x:
        b = x & -x
        yield b.bit_length() - 1
        x ^= b


def popcount(x: int) -> int:
    return x.bit_count()


class Graph:
    """Simple undirected graph, value-immutable after construction."""

    __slots__ = ("n", "adj", "m")

    def __init__(self, n: int, adj: Iterable[int]):
        rows = tuple(adj)
        if not 1 <= n <= MAX_VERTICES:
            if n > MAX_VERTICES:
                raise CapacityError(f"{n} vertices exceeds the {MAX_VERTICES}-vertex capacity")
            raise ValueError(f"vertex count must be >= 1, got {n}")
        if len(rows) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        deg_total = 0
        for v, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"row {v} has neighbors outside 0..{n - 1}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            deg_total += row.bit_count()
        for v, row in enumerate(rows):
            for u in bits(row):
                if not rows[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {u})")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", rows)
        object.__setattr__(self, "m", deg_total // 2)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def neighbors(self, v: int) -> int:
        """Neighborhood of v as a bitset."""
        return self.adj[v]

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, sorted."""
        out = []
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1) << (u + 1)):
                out.append((u, v))
        return out

    def min_degree_vertex(self) -> int:
        """Lowest-index vertex of minimum degree."""
        return min(range(self.n), key=lambda v: (self.adj[v].bit_count(), v))

    def components(self) -> list[int]:
        """Connected components as vertex bitsets, ordered by lowest member."""
        seen = 0
        comps = []
        for v in range(self.n):
            if seen >> v & 1:
                continue
            comp = 1 << v
            frontier = comp
            while frontier:
                grown = 0
                for u in bits(frontier):
                    grown |= self.adj[u]
                frontier = grown & ~comp
                comp |= grown
            comps.append(comp)
            seen |= comp
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) == 1


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicate edges are merged."""
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) outside 0..{n - 1}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full ^ (1 << v) for v in range(n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def add_edges(g: Graph, edges: Iterable[tuple[int, int]]) -> Graph:
    rows = list(g.adj)
    for u, v in edges:
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(g.n, rows)


def remove_edges(g: Graph, edges: Iterable[tuple[int, int]]) -> Graph:
    rows = list(g.adj)
    for u, v in edges:
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
    return Graph(g.n, rows)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, [full & ~(row | (1 << v)) for v, row in enumerate(g.adj)])


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    n = g1.n + g2.n
    if n > MAX_VERTICES:
        raise CapacityError(f"union on {n} vertices exceeds the {MAX_VERTICES}-vertex capacity")
    rows = list(g1.adj) + [row << g1.n for row in g2.adj]
    return Graph(n, rows)


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two vertex sets."""
    n = g1.n + g2.n
    if n > MAX_VERTICES:
        raise CapacityError(f"join on {n} vertices exceeds the {MAX_VERTICES}-vertex capacity")
    left_mask = (1 << g1.n) - 1
    right_mask = ((1 << g2.n) - 1) << g1.n
    rows = [row | right_mask for row in g1.adj]
    rows += [(row << g1.n) | left_mask for row in g2.adj]
    return Graph(n, rows)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Restrict to the given vertices, relabeled 0..k-1 preserving their order."""
    vs = list(vertices)
    if len(set(vs)) != len(vs):
        raise ValueError("vertex selection contains duplicates")
    for v in vs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} not in 0..{g.n - 1}")
    index = {v: i for i, v in enumerate(vs)}
    rows = [0] * len(vs)
    for v, i in index.items():
        for u in bits(g.adj[v]):
            j = index.get(u)
            if j is not None:
                rows[i] |= 1 << j
    return Graph(len(vs), rows)


@dataclass(frozen=True)
class VertexPartition:
    """Ordered list of disjoint vertex classes; covers says whether their union is all of V."""

    classes: tuple[tuple[int, ...], ...]
    covers: bool = False

    def __post_init__(self):
        seen = 0
        norm = []
        for cls in self.classes:
            mask = 0
            for v in cls:
                if v < 0:
                    raise ValueError(f"negative vertex {v}")
                mask |= 1 << v
            if mask.bit_count() != len(tuple(cls)):
                raise ValueError("class contains duplicate vertices")
            if mask & seen:
                raise ValueError("classes are not pairwise disjoint")
            seen |= mask
            norm.append(tuple(sorted(cls)))
        object.__setattr__(self, "classes", tuple(norm))

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    def union_mask(self) -> int:
        mask = 0
        for cls in self.classes:
            for v in cls:
                mask |= 1 << v
        return mask

    def class_masks(self) -> tuple[int, ...]:
        out = []
        for cls in self.classes:
            mask = 0
            for v in cls:
                mask |= 1 << v
            out.append(mask)
        return tuple(out)

    def class_of(self, v: int) -> int:
        for i, cls in enumerate(self.classes):
            if v in cls:
                return i
        raise ValueError(f"vertex {v} is in no class")


# ---------------------------------------------------------------------------
# graph6 codec
#
# Header: chr(n + 63) for n <= 62, else '~' followed by three bytes holding
# n in 18 bits.  Body: the upper triangle read column by column (a01; a02,
# a12; a03, a13, a23; ...), packed big-endian into 6-bit groups, each offset
# by 63 into printable ASCII.  Trailing pad bits must be zero.
# ---------------------------------------------------------------------------

GRAPH6_HEADER = ">>graph6<<"


def encode_graph6(g: Graph) -> str:
    """Encode with the single-byte size header; requires n <= 62."""
    n = g.n
    if n > 62:
        raise CapacityError(f"single-byte graph6 header requires n <= 62, got {n}")
    out = [chr(n + 63)]
    acc = 0
    nbits = 0
    for col in range(1, n):
        for row in range(col):
            acc = acc << 1 | (g.adj[row] >> col & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def decode_graph6(s: str | bytes) -> Graph:
    """Decode a graph6 string; rejects malformed bytes with their offset."""
    if isinstance(s, bytes):
        s = s.decode("ascii")
    s = s.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise Graph6ParseError("empty graph6 string", 0)
    data = [ord(c) - 63 for c in s]
    for i, v in enumerate(data):
        if not 0 <= v <= 63:
            raise Graph6ParseError(f"byte {s[i]!r} outside graph6 range", i)
    if data[0] < 63:
        n = data[0]
        body = data[1:]
        body_offset = 1
    else:
        if len(data) < 4:
            raise Graph6ParseError("truncated multi-byte size header", len(s))
        if data[1] == 63:
            raise Graph6ParseError("8-byte size headers are beyond capacity", 1)
        n = data[1] << 12 | data[2] << 6 | data[3]
        body = data[4:]
        body_offset = 4
    if n == 0:
        raise Graph6ParseError("graphs must have at least one vertex", 0)
    if n > MAX_VERTICES:
        raise CapacityError(f"{n} vertices exceeds the {MAX_VERTICES}-vertex capacity")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(body) != nbytes:
        raise Graph6ParseError(
            f"expected {nbytes} body bytes for n={n}, got {len(body)}",
            body_offset + min(len(body), nbytes),
        )
    rows = [0] * n
    k = 0
    for col in range(1, n):
        for row in range(col):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[row] |= 1 << col
                rows[col] |= 1 << row
            k += 1
    # pad bits beyond the triangle must be zero
    for k in range(nbits, nbytes * 6):
        if body[k // 6] >> (5 - k % 6) & 1:
            raise Graph6ParseError("nonzero trailing pad bits", body_offset + k // 6)
    return Graph(n, rows)
