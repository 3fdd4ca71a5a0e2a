"""Canonical labeling and the orderly-generation acceptance test."""

from __future__ import annotations

import itertools
import random

import numpy as np
import pytest

from splitex import are_isomorphic, canonical_graph, certificate, from_edges
from splitex.canon import automorphism_fixing, canonical_form, is_max_code, labeled_code
from splitex.graphs import Graph, complete_graph, cycle_graph, empty_graph
from splitex.search import enumerate_graphs


def random_graph(rng: random.Random, n: int, density: float = 0.5) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < density]
    return from_edges(n, edges)


def relabel(g: Graph, perm: tuple[int, ...]) -> Graph:
    """perm[i] = new label of vertex i."""
    rows = [0] * g.n
    for u, v in g.edges():
        rows[perm[u]] |= 1 << perm[v]
        rows[perm[v]] |= 1 << perm[u]
    return Graph(g.n, rows)


def brute_max_code(g: Graph) -> int:
    return max(labeled_code(relabel(g, p).adj, g.n) for p in itertools.permutations(range(g.n)))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_canonical_form_is_true_maximum(n):
    rng = random.Random(n)
    for _ in range(30):
        g = random_graph(rng, n)
        code, perm = canonical_form(g.adj, n)
        assert code == brute_max_code(g)
        assert labeled_code(canonical_graph(g).adj, n) == code
        assert sorted(perm) == list(range(n))


def test_is_max_code_matches_canonical_form():
    rng = random.Random(99)
    for _ in range(200):
        n = rng.randint(1, 7)
        g = random_graph(rng, n)
        code, _ = canonical_form(g.adj, n)
        assert is_max_code(g.adj, n) == (labeled_code(g.adj, n) == code)


def test_certificate_is_isomorphism_invariant():
    rng = random.Random(13)
    for _ in range(60):
        n = rng.randint(2, 7)
        g = random_graph(rng, n)
        perm = tuple(rng.sample(range(n), n))
        assert certificate(g) == certificate(relabel(g, perm))


def test_certificate_separates_nonisomorphic():
    path4 = from_edges(4, [(0, 1), (1, 2), (2, 3)])
    star4 = from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert certificate(path4) != certificate(star4)
    assert not are_isomorphic(path4, star4)


def test_symmetric_graphs_canonicalize_fast():
    for g in (empty_graph(10), complete_graph(10), cycle_graph(9)):
        code, _ = canonical_form(g.adj, g.n)
        assert is_max_code(canonical_graph(g).adj, g.n)


def test_automorphism_fixing():
    c5 = cycle_graph(5)
    image = automorphism_fixing(c5, {0: 2})
    assert image is not None
    for u, v in c5.edges():
        assert c5.has_edge(image[u], image[v])
    # path endpoints map to each other but an endpoint cannot map to the middle
    p3 = from_edges(3, [(0, 1), (1, 2)])
    assert automorphism_fixing(p3, {0: 2}) is not None
    assert automorphism_fixing(p3, {0: 1}) is None


def numpy_label_and_dedup_count(n: int) -> int:
    """Independent brute force: canonicalize all 2^C(n,2) labeled graphs by
    minimizing over every permutation, with numpy doing one vectorized bit
    shuffle per permutation."""
    pairs = list(itertools.combinations(range(n), 2))
    nbits = len(pairs)
    idx = {pair: i for i, pair in enumerate(pairs)}
    codes = np.arange(1 << nbits, dtype=np.int64)
    best = codes.copy()
    for perm in itertools.permutations(range(n)):
        shuffled = np.zeros_like(codes)
        for (u, v), i in idx.items():
            j = idx[tuple(sorted((perm[u], perm[v])))]
            shuffled |= ((codes >> i) & 1) << j
        np.minimum(best, shuffled, out=best)
    return int(np.unique(best).size)


@pytest.mark.parametrize("n,expected", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)])
def test_enumeration_matches_independent_dedup(n, expected):
    assert enumerate_graphs(n) == expected
    if n <= 6:
        assert numpy_label_and_dedup_count(n) == expected


def test_enumeration_emits_canonical_representatives():
    seen = set()

    def visit(g: Graph) -> None:
        assert is_max_code(g.adj, g.n)
        cert = certificate(g)
        assert cert not in seen
        seen.add(cert)

    enumerate_graphs(6, visit=visit)
    assert len(seen) == 156
