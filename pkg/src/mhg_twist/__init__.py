"""Twists of distance alphabets for metrically homogeneous graphs.

The package decides, for a parameter tuple (delta, K1, K2, C0, C1)
describing which distance triangles a graph of diameter delta realizes,
which permutations of 1..delta map that triangle catalog onto another
valid one.  It also applies such permutations to concrete finite
graphs and checks metric homogeneity directly.
"""

from ._backend import backend_name, resolve_backend
from .classifier import (
    MAX_SEARCH_DELTA,
    Table1Report,
    TheoremReport,
    classification_rows,
    classify_cycle_twists,
    find_twists,
    named_twists,
    verify_table1,
    verify_theorem_twists,
)
from .errors import (
    BudgetError,
    DimensionMismatchError,
    DisconnectedGraphError,
    EngineError,
    InvalidDiameterError,
    InvalidInputError,
    InvalidStateError,
    NotAUnitError,
    OutOfAlphabetError,
)
from .finite_graphs import (
    AntipodalReport,
    ComplementReport,
    CoverCandidate,
    CoverSearchReport,
    FiniteMetricGraph,
    HomogeneityResult,
    TwistedMetricReport,
    antipodal_double_cover,
    apply_twist_metric,
    check_antipodal_law,
    complement_twist,
    complete_multipartite,
    crown_graph,
    cycle_graph,
    find_antipodal_cover,
    from_adjacency_json,
    from_edge_list,
    graph_triangle_set,
    icosahedron,
    is_isomorphic,
    is_metrically_homogeneous,
    johnson_graph,
    load_graph_file,
    path_metric,
    rook_graph,
    to_adjacency_json,
    to_edge_list,
)
from .parameter_space import (
    INFINITY,
    DerivationResult,
    ParameterTuple,
    derive_parameters,
    enumerate_candidates,
    is_self_consistent,
    table1_rows,
)
from .parameter_space import realized_set as realized_parameter_set
from .permutations import (
    MAX_DELTA,
    Twist,
    compose,
    format_cycles,
    identity,
    invert,
    mu,
    parse_cycles,
    rho,
    rho_inverse,
    tau,
)
from .triangle_catalog import (
    TriangleSet,
    all_triples,
    contains_geodesics,
    fiber_distances,
    gamma_diameter,
    image_set,
    is_metric,
    realized_set,
)
from .twistability import (
    OUTCOME_METRIC_VIOLATION,
    OUTCOME_MISSING_GEODESIC,
    OUTCOME_TWISTABLE,
    TwistVerdict,
    check_twistable,
    twist_image_parameters,
)

__version__ = "0.1.0"

__all__ = [
    "AntipodalReport",
    "BudgetError",
    "ComplementReport",
    "CoverCandidate",
    "CoverSearchReport",
    "DerivationResult",
    "DimensionMismatchError",
    "DisconnectedGraphError",
    "EngineError",
    "FiniteMetricGraph",
    "HomogeneityResult",
    "INFINITY",
    "InvalidDiameterError",
    "InvalidInputError",
    "InvalidStateError",
    "MAX_DELTA",
    "MAX_SEARCH_DELTA",
    "NotAUnitError",
    "OUTCOME_METRIC_VIOLATION",
    "OUTCOME_MISSING_GEODESIC",
    "OUTCOME_TWISTABLE",
    "OutOfAlphabetError",
    "ParameterTuple",
    "Table1Report",
    "TheoremReport",
    "TriangleSet",
    "Twist",
    "TwistVerdict",
    "TwistedMetricReport",
    "all_triples",
    "antipodal_double_cover",
    "apply_twist_metric",
    "backend_name",
    "check_antipodal_law",
    "check_twistable",
    "classification_rows",
    "classify_cycle_twists",
    "complement_twist",
    "complete_multipartite",
    "compose",
    "contains_geodesics",
    "crown_graph",
    "cycle_graph",
    "derive_parameters",
    "enumerate_candidates",
    "fiber_distances",
    "find_antipodal_cover",
    "find_twists",
    "format_cycles",
    "from_adjacency_json",
    "from_edge_list",
    "gamma_diameter",
    "graph_triangle_set",
    "icosahedron",
    "identity",
    "image_set",
    "invert",
    "is_isomorphic",
    "is_metric",
    "is_metrically_homogeneous",
    "is_self_consistent",
    "johnson_graph",
    "load_graph_file",
    "mu",
    "named_twists",
    "parse_cycles",
    "path_metric",
    "realized_parameter_set",
    "realized_set",
    "resolve_backend",
    "rho",
    "rho_inverse",
    "rook_graph",
    "table1_rows",
    "tau",
    "to_adjacency_json",
    "to_edge_list",
    "twist_image_parameters",
    "verify_table1",
    "verify_theorem_twists",
]
