"""The class-typed rewiring procedure: typing, stepping, tracing."""

from __future__ import annotations

import random

import pytest

from splitex import (
    VertexPartition,
    chromatic_number,
    classify,
    from_edges,
    g_ij,
    induced_subgraph,
    procedure_step,
    run_procedure,
    y_graph,
)
from splitex.graphs import Graph
from splitex.symmetrization import TYPE_A, TYPE_B, TYPE_C


def coloring_classes(g: Graph, u0: int) -> VertexPartition:
    """Color classes of g - u0, expressed in g's vertex labels."""
    rest = [v for v in range(g.n) if v != u0]
    sub = induced_subgraph(g, rest)
    result = chromatic_number(sub)
    classes = [[] for _ in range(result.chi)]
    for i, color in enumerate(result.coloring):
        classes[color].append(rest[i])
    return VertexPartition(tuple(tuple(c) for c in classes))


def random_graph(rng: random.Random, n: int, density: float = 0.5) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < density]
    return from_edges(n, edges)


def test_g_ij_initial_state_types_and_immediate_termination():
    y, spec = y_graph(9, 3)
    classes = VertexPartition(spec.classes)
    trace = run_procedure(y, spec.u0, classes)
    assert len(trace.states) == 1
    state = trace.final
    assert state.labels == (TYPE_B, TYPE_B, TYPE_A)
    assert classify(state, 0) == TYPE_B
    assert classify(state, 2) == TYPE_A
    with pytest.raises(ValueError):
        classify(state, 5)


def test_empty_active_class_is_type_a():
    # u0 = 3 adjacent only to vertex 0; class (1, 2) has empty active set
    g = from_edges(4, [(0, 3), (0, 1), (0, 2)])
    trace = run_procedure(g, 3, VertexPartition(((0,), (1, 2))))
    assert trace.states[0].labels[1] == TYPE_A


def test_two_vertex_class_missing_cross_edge_is_type_c():
    # classes {0,1} and {2}; u0 = 3 adjacent to 0, 1; vertex 1 misses the edge to 2
    g = from_edges(4, [(0, 2), (0, 3), (1, 3), (2, 3)])
    trace = run_procedure(g, 3, VertexPartition(((0, 1), (2,))))
    assert trace.states[0].labels[0] == TYPE_C


def test_single_step_edge_accounting():
    g = from_edges(4, [(0, 2), (0, 3), (1, 3), (2, 3)])
    state = run_procedure(g, 3, VertexPartition(((0, 1), (2,)))).states[0]
    outcome = procedure_step(state)
    assert outcome is not None
    nxt, move = outcome
    assert len(move.removed) == 1 and move.removed[0] == (3, move.vertex)
    assert len(move.added) >= 1
    assert nxt.graph.m - state.graph.m == len(move.added) - 1


def test_terminal_state_returns_none():
    y, spec = y_graph(7, 3)
    state = run_procedure(y, spec.u0, VertexPartition(spec.classes)).final
    assert procedure_step(state) is None


def test_run_procedure_validates_coloring():
    g = from_edges(3, [(0, 1), (1, 2)])
    with pytest.raises(ValueError, match="proper"):
        run_procedure(g, 2, VertexPartition(((0, 1),)))
    with pytest.raises(ValueError, match="partition"):
        run_procedure(g, 2, VertexPartition(((0,),)))


def test_trace_invariants_on_random_graphs():
    rng = random.Random(19)
    for _ in range(150):
        g = random_graph(rng, rng.randint(2, 9))
        u0 = g.min_degree_vertex()
        classes = coloring_classes(g, u0)
        trace = run_procedure(g, u0, classes)
        degree_before = g.degree(u0)
        assert len(trace.moved) <= degree_before
        for earlier, later in zip(trace.states, trace.states[1:]):
            assert later.graph.m >= earlier.graph.m
            for a, b in zip(earlier.active, later.active):
                assert b & ~a == 0  # active sets shrink weakly
        assert TYPE_C not in trace.final.labels
        # classes remain a proper coloring throughout: re-validated by construction,
        # but assert directly for the final state
        final = trace.final
        for mask in final.classes.class_masks():
            for v in range(g.n):
                if mask >> v & 1:
                    assert final.graph.adj[v] & mask == 0


def test_terminal_two_b_classes_embed_in_g_ij():
    # start from a Y-type graph with random cross edges knocked out away from
    # the apex: the procedure must saturate back inside the corresponding g_ij
    rng = random.Random(47)
    confirmed = 0
    for _ in range(60):
        n, p = rng.choice([(7, 3), (8, 3), (9, 3), (9, 4)])
        y, spec = y_graph(n, p)
        removable = [
            (a, b) for a, b in y.edges()
            if spec.u0 not in (a, b) and {a, b} != {spec.u1, spec.u2}
        ]
        doomed = rng.sample(removable, rng.randint(0, min(3, len(removable))))
        from splitex.graphs import remove_edges

        g = remove_edges(y, doomed)
        trace = run_procedure(g, spec.u0, VertexPartition(spec.classes))
        final = trace.final
        b_classes = [s for s, lab in enumerate(final.labels) if lab == TYPE_B]
        if len(b_classes) != 2:
            continue
        i, j = b_classes
        u_i = final.active[i].bit_length() - 1
        u_j = final.active[j].bit_length() - 1
        target = g_ij(final.classes.classes, i, j, u_i, u_j)
        assert all(final.graph.adj[v] & ~target.adj[v] == 0 for v in range(g.n))
        confirmed += 1
    assert confirmed >= 30


def test_split_free_diagnostics_recorded():
    y, spec = y_graph(9, 3)
    trace = run_procedure(y, spec.u0, VertexPartition(spec.classes), split_check=(3, 2))
    assert trace.split_free == (True,)
