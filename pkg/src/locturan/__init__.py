"""Exact localized path, cycle, matching, and clique statistics for small graphs,
with path double covers, matching structure tools, and exhaustive verifiers."""

from .graphs import (
    Graph,
    WeightedGraph,
    canonical_form,
    complete_graph,
    connected_components,
    cut_edges_and_2ec_pieces,
    cut_vertices,
    cycle_graph,
    disjoint_union,
    enumerate_graphs,
    is_connected,
    is_two_edge_connected,
    join_graphs,
    parse_graph6,
    parse_weighted_graph,
    path_graph,
    seeded_weights,
    star_graph,
    write_graph6,
    write_weighted_graph,
)
from .stats import (
    CliqueStatProfile,
    EdgeStatProfile,
    clique_count,
    clique_path_profile,
    clique_star_profile,
    cycle_profile,
    enumerate_cliques,
    f_edge_set,
    longest_cycle_through_edge,
    longest_path,
    longest_path_through_edge,
    longest_path_with_consecutive_clique,
    longest_vpath,
    longest_vpath_through_edge,
    matching_number,
    matching_profile,
    max_matching,
    max_matching_containing_edge,
    max_star_over_clique,
    max_weight_cycle,
    max_weight_path,
    max_weight_path_through_edge,
    path_profile,
    star_profile,
    star_size_through_edge,
    vpath_profile,
    weighted_path_profile,
)
from .covers import (
    CoverBound,
    CoverVerdict,
    PathDoubleCover,
    bound_from_cover,
    cover_report,
    find_spdc,
    parse_cover,
    validate_pdc,
    write_cover,
)
from .matching import (
    ClosureResult,
    GEDecomposition,
    closure_preserves_matching_number,
    gallai_edmonds,
    is_factor_critical,
    k_closure,
    nw_bound,
    nw_bound_check,
    stability_check,
)
from .verify import (
    ALL_THEOREMS,
    CorpusResult,
    TheoremSummary,
    VerificationReport,
    verify_corpus,
)
from .rationals import format_rational, parse_rational

__all__ = [
    "ALL_THEOREMS",
    "CliqueStatProfile",
    "ClosureResult",
    "CorpusResult",
    "CoverBound",
    "CoverVerdict",
    "EdgeStatProfile",
    "GEDecomposition",
    "Graph",
    "PathDoubleCover",
    "TheoremSummary",
    "VerificationReport",
    "WeightedGraph",
    "bound_from_cover",
    "canonical_form",
    "clique_count",
    "clique_path_profile",
    "clique_star_profile",
    "closure_preserves_matching_number",
    "complete_graph",
    "connected_components",
    "cover_report",
    "cut_edges_and_2ec_pieces",
    "cut_vertices",
    "cycle_graph",
    "cycle_profile",
    "disjoint_union",
    "enumerate_cliques",
    "enumerate_graphs",
    "f_edge_set",
    "find_spdc",
    "format_rational",
    "gallai_edmonds",
    "is_connected",
    "is_factor_critical",
    "is_two_edge_connected",
    "join_graphs",
    "k_closure",
    "longest_cycle_through_edge",
    "longest_path",
    "longest_path_through_edge",
    "longest_path_with_consecutive_clique",
    "longest_vpath",
    "longest_vpath_through_edge",
    "matching_number",
    "matching_profile",
    "max_matching",
    "max_matching_containing_edge",
    "max_star_over_clique",
    "max_weight_cycle",
    "max_weight_path",
    "max_weight_path_through_edge",
    "nw_bound",
    "nw_bound_check",
    "parse_cover",
    "parse_graph6",
    "parse_rational",
    "parse_weighted_graph",
    "path_graph",
    "path_profile",
    "seeded_weights",
    "star_graph",
    "star_profile",
    "star_size_through_edge",
    "validate_pdc",
    "verify_corpus",
    "vpath_profile",
    "weighted_path_profile",
    "write_cover",
    "write_graph6",
    "write_weighted_graph",
]

__version__ = "0.1.0"
