"""Class-typed rewiring toward the Y-type extremal shape, with full tracing.

Starting from a graph, a distinguished vertex u0, and a proper coloring of
the rest, each step picks a color class whose active vertices (neighbors of
u0 in that class) are not yet saturated toward the other classes, detaches
one such vertex from u0, and joins it to everything it was missing.  Edge
count never decreases and each step deletes one u0-edge, so the run ends
within deg(u0) steps.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graphs import Graph, VertexPartition, add_edges, bits, remove_edges
from .oracles import contains_complete_split

TYPE_A = "A"
TYPE_B = "B"
TYPE_C = "C"


@dataclass(frozen=True)
class ProcedureState:
    """One snapshot: current graph, active neighbor classes, and their types."""

    graph: Graph
    u0: int
    classes: VertexPartition
    active: tuple[int, ...]  # per class, bitset N(u0) & class
    labels: tuple[str, ...]
    step: int


@dataclass(frozen=True)
class StepMove:
    vertex: int
    removed: tuple[tuple[int, int], ...]
    added: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class ProcedureTrace:
    states: tuple[ProcedureState, ...]
    moved: tuple[StepMove, ...]
    split_free: Optional[tuple[bool, ...]] = None  # per-state diagnostic, if requested

    @property
    def final(self) -> ProcedureState:
        return self.states[-1]


def _class_label(graph: Graph, u0: int, active_mask: int, union_other: int) -> str:
    if active_mask == 0:
        return TYPE_A
    u0_bit = 1 << u0
    saturated = all(
        (graph.adj[u] & ~u0_bit) == union_other for u in bits(active_mask)
    )
    if saturated:
        return TYPE_A
    if active_mask.bit_count() == 1:
        return TYPE_B
    return TYPE_C


def _make_state(graph: Graph, u0: int, classes: VertexPartition, step: int) -> ProcedureState:
    masks = classes.class_masks()
    union_all = classes.union_mask()
    if union_all | (1 << u0) != (1 << graph.n) - 1 or union_all >> u0 & 1:
        raise ValueError("classes must partition the vertices other than u0")
    for mask in masks:
        for v in bits(mask):
            if graph.adj[v] & mask:
                raise ValueError("classes are not a proper coloring of graph - u0")
    nbr0 = graph.adj[u0]
    active = tuple(mask & nbr0 for mask in masks)
    labels = tuple(
        _class_label(graph, u0, act, union_all & ~mask)
        for act, mask in zip(active, masks)
    )
    return ProcedureState(graph=graph, u0=u0, classes=classes, active=active,
                          labels=labels, step=step)


def classify(state: ProcedureState, s: int) -> str:
    """Type of class s at this step: A (saturated or empty), B, or C."""
    if not 0 <= s < len(state.classes.classes):
        raise ValueError(f"class index {s} out of range")
    return state.labels[s]


def procedure_step(state: ProcedureState) -> Optional[tuple[ProcedureState, StepMove]]:
    """Rewire one vertex out of the lowest-index type-C class.

    Returns None when no class is type C (the procedure has terminated).
    Deterministic: lowest class index, then lowest vertex index.
    """
    try:
        s = state.labels.index(TYPE_C)
    except ValueError:
        return None
    masks = state.classes.class_masks()
    union_other = state.classes.union_mask() & ~masks[s]
    u0_bit = 1 << state.u0
    graph = state.graph
    chosen = None
    for u in bits(state.active[s]):
        if (graph.adj[u] & ~u0_bit) != union_other:
            chosen = u
            break
    assert chosen is not None, "a type-C class always has an unsaturated vertex"
    missing = union_other & ~graph.adj[chosen]
    removed = ((state.u0, chosen),)
    added = tuple((chosen, w) for w in bits(missing))
    rewired = add_edges(remove_edges(graph, removed), added)
    nxt = _make_state(rewired, state.u0, state.classes, state.step + 1)
    expected_active = list(state.active)
    expected_active[s] &= ~(1 << chosen)
    assert nxt.active == tuple(expected_active)
    return nxt, StepMove(vertex=chosen, removed=removed, added=added)


def run_procedure(
    g: Graph,
    u0: int,
    classes: VertexPartition,
    split_check: Optional[tuple[int, int]] = None,
) -> ProcedureTrace:
    """Run the rewiring to termination and return the full trace.

    classes must be a proper coloring of g - u0.  When split_check=(p, q)
    is given, each state also records whether it is free of the p-clique
    plus q-apex pattern (a diagnostic; the run never fails on it).
    """
    if not 0 <= u0 < g.n:
        raise ValueError(f"u0={u0} not in 0..{g.n - 1}")
    state = _make_state(g, u0, classes, step=1)
    states = [state]
    moves: list[StepMove] = []
    while True:
        outcome = procedure_step(state)
        if outcome is None:
            break
        state, move = outcome
        assert state.graph.m >= states[-1].graph.m
        states.append(state)
        moves.append(move)
    freeness = None
    if split_check is not None:
        p, q = split_check
        freeness = tuple(
            contains_complete_split(st.graph, p, q) is None for st in states
        )
    return ProcedureTrace(states=tuple(states), moved=tuple(moves), split_free=freeness)
