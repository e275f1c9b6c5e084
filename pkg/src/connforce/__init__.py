"""Connected zero forcing on simple graphs."""

from .errors import (
    BudgetExceededError,
    ConnForceError,
    FamilyConstraintError,
    FormatError,
    InvalidEdgeError,
    InvalidTraceError,
    NotSingleCliqueError,
    PreconditionError,
)
from .exact import (
    SolveResult,
    connected_forcing_number,
    connected_forcing_spread,
    count_minimum_connected_forcing_sets,
    forcing_number,
    forcing_spread,
    path_cover_number,
)
from .forcing import ForcingTrace, forcing_chains, forcing_closure, is_connected_forcing_set, is_forcing_set
from .graph import Graph, VertexSet, components_after_removal, format_edge_list, is_connected, new_graph, parse_edge_list
from .structural import (
    CliqueStructure,
    Extremal,
    classify_extremal,
    detect_single_clique,
    flower_snark_upper_set,
    single_clique_connected_forcing,
    tree_connected_forcing,
    tree_count_minimum_sets,
)
from .structure import (
    StructuralReport,
    articulation_points,
    blocks,
    compute_r_sets,
    is_path_graph,
    leaf_count_at,
    leaf_number,
    leaves,
    reduce_leaves,
)

__version__ = "0.1.0"
