"""2-switch calculus on graphs and forests.

Edge-pair switches that preserve every vertex degree, traces that carry
one forest to another through forests only, nine parameters that move by
at most one per switch, and exhaustive audits of both facts at small
order.
"""

from .census import CENSUS_MAX, Census, census
from .explorer import (
    AuditReport,
    BipartiteCheckReport,
    CapExceededError,
    SearchResult,
    ValueOutOfRangeError,
    are_isomorphic,
    bipartite_counterexample_check,
    constrained_transition_search,
    edge_diff_audit,
    enumerate_family,
    family_members,
    interval_audit,
    realize_parameter_value,
    stability_audit,
)
from .fixtures import FIXTURE_NAMES, fig1, fig2, load
from .graphs import (
    Bipartition,
    Graph,
    GraphError,
    GraphFormatError,
    NotAForestError,
    bipartition,
    components,
    degree_sequence,
    format_edge_list,
    is_bipartite,
    is_forest,
    is_graphical,
    is_tree,
    is_unicyclic,
    kappa,
    parse_edge_list,
    path_in_forest,
    to_dot,
)
from .parameters import (
    STABLE_KINDS,
    IsolatedVertexError,
    adjacency_rank,
    chromatic_number,
    clique_number,
    components_count,
    compute,
    domination_number,
    edge_cover_number,
    forest_rank_nullity,
    independence_number,
    matching_number,
    path_cover_number,
    vertex_cover_number,
)
from .switch import (
    ActionMatrix,
    SwitchKind,
    apply_switch,
    classify,
    equivalent_forms,
    is_interchangeable,
    nontrivial_matrices,
)
from .transition import (
    DegreeSequenceMismatchError,
    SwitchTrace,
    TraceFormatError,
    TraceValidation,
    TrivialStepError,
    leaf_fixing_switch,
    replay,
    trace_from_json,
    trace_to_json,
    transition_forest,
    transition_graph,
    trimmable_leaves,
    validate_trace,
)

__version__ = "0.1.0"

__all__ = [
    "ActionMatrix",
    "AuditReport",
    "Bipartition",
    "BipartiteCheckReport",
    "CENSUS_MAX",
    "CapExceededError",
    "Census",
    "DegreeSequenceMismatchError",
    "FIXTURE_NAMES",
    "Graph",
    "GraphError",
    "GraphFormatError",
    "IsolatedVertexError",
    "NotAForestError",
    "STABLE_KINDS",
    "SearchResult",
    "SwitchKind",
    "SwitchTrace",
    "TraceFormatError",
    "TraceValidation",
    "TrivialStepError",
    "ValueOutOfRangeError",
    "adjacency_rank",
    "apply_switch",
    "are_isomorphic",
    "bipartite_counterexample_check",
    "bipartition",
    "census",
    "chromatic_number",
    "classify",
    "clique_number",
    "components",
    "components_count",
    "compute",
    "constrained_transition_search",
    "degree_sequence",
    "domination_number",
    "edge_cover_number",
    "edge_diff_audit",
    "enumerate_family",
    "equivalent_forms",
    "family_members",
    "fig1",
    "fig2",
    "forest_rank_nullity",
    "format_edge_list",
    "independence_number",
    "interval_audit",
    "is_bipartite",
    "is_forest",
    "is_graphical",
    "is_interchangeable",
    "is_tree",
    "is_unicyclic",
    "kappa",
    "leaf_fixing_switch",
    "load",
    "matching_number",
    "nontrivial_matrices",
    "parse_edge_list",
    "path_cover_number",
    "path_in_forest",
    "realize_parameter_value",
    "replay",
    "stability_audit",
    "to_dot",
    "trace_from_json",
    "trace_to_json",
    "transition_forest",
    "transition_graph",
    "trimmable_leaves",
    "validate_trace",
    "vertex_cover_number",
]
