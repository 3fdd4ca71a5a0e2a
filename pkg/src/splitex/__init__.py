"""Extremal and spectral analysis of clique- and complete-split-free graphs.

Bitset graphs with a graph6 codec, deterministic builders for the balanced
multipartite and Y-type families, exact containment and coloring oracles,
certified spectral radius with an exact integer fallback, the class-typed
rewiring procedure, and an exhaustive isomorphism-free search that verifies
the classical edge-count and spectral-radius bounds at small n.
"""

from .constructions import SplitParams, YGraphSpec, complete_split, g_ij, turan, y_graph
from .errors import (
    CapacityError,
    Graph6ParseError,
    PrecisionError,
    UndecidableComparisonError,
)
from .graphs import (
    Graph,
    VertexPartition,
    add_edges,
    complement,
    decode_graph6,
    disjoint_union,
    encode_graph6,
    from_edges,
    induced_subgraph,
    join,
    remove_edges,
)
from .canon import are_isomorphic, canonical_graph, canonical_graph6, certificate
from .oracles import (
    ColoringResult,
    ContainmentWitness,
    chromatic_number,
    contains_clique,
    contains_complete_split,
    contains_subgraph,
    intersection_lower_bound,
    is_edge_color_critical,
    is_k_partite,
)
from .spectral import (
    BoundReport,
    Ordering,
    RotationSpec,
    SpectralResult,
    check_nosal,
    check_spectral_turan,
    check_wilf,
    compare_rho,
    rotate_edges,
    spectral_radius,
    verify_rotation_lemma,
)
from .symmetrization import (
    ProcedureState,
    ProcedureTrace,
    StepMove,
    classify,
    procedure_step,
    run_procedure,
)
from .search import (
    ExtremalRecord,
    RecordStore,
    SearchSpec,
    compute_ex,
    compute_spex,
    enumerate_graphs,
    turan_edge_count,
    verify_theorem,
)

__version__ = "0.1.0"
