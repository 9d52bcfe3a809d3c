"""Chromatic number of signed graphs: exact solver, constructive bounds and
small-instance verification."""

from .brooks import (
    BrooksCertificate,
    ExceptionalClass,
    brooks_colour,
    classify_exceptional,
    colour_complete,
    connected_ordering,
    find_noncut_pair,
)
from .colour import (
    ChromaticResult,
    ColourSet,
    GammaPair,
    check_proper,
    chromatic_number,
    colour_set,
    degeneracy_ordering,
    find_n_colouring,
    gamma_pair,
    greedy_colour,
    is_proper,
    switch_colouring,
)
from .graph import (
    BalanceReport,
    PositiveLoopError,
    SignedGraph,
    build_graph,
    is_antibalanced,
    is_balanced,
    switch,
    switching_equivalent,
)
from .io import parse_graph_file, render_colouring, render_graph
from .structure import (
    AcyclicColouring,
    EdgeForestPair,
    IndependentForestPartition,
    VertexForestPartition,
    brute_acyclic_colouring,
    brute_partition_search,
    colour_from_acyclic,
    colour_from_independent_forest_partition,
    colour_from_two_edge_forests,
    colour_from_vertex_forest_partition,
    construct_sharpness_graph,
)
from .verify import EnumerationSpec, VerificationReport, enumerate_signed_graphs, verify_theorem

__version__ = "0.1.0"
