"""Excessive [l,m]-factorizations of graphs.

Exact computation of excessive [l,m]-indices with witness coverings,
equalized edge colourings, compatibility and coherence analyses, and
brute-force oracles that double-check everything at desk scale.
"""

from .analysis import (
    CoherenceReport,
    CompatibilityReport,
    coherence_report,
    compatibility_function,
    compatibility_index,
    compatibility_report,
    is_lm_compatible,
)
from .coloring import (
    EdgeColoring,
    chromatic_index,
    equalize,
    equalized_k_coloring,
    find_k_edge_coloring,
    optimal_m_bounded_coloring,
)
from .errors import (
    BudgetExceededError,
    CoveringError,
    EnumerationCapError,
    FormatError,
    ParameterError,
    PreconditionError,
    StructuralError,
)
from .excessive import (
    INFINITY,
    IndexResult,
    exc_algorithm,
    excessive_lm_index,
    excessive_m_index,
    lm_index_via_pairs,
    verify_covering,
)
from .graphs import (
    Covering,
    Edge,
    Matching,
    Multigraph,
    SimpleGraph,
    covering_from_json,
    covering_induced_by_coloring,
    covering_to_json,
    delete_edge_instances,
    encode_graph6,
    format_edge_list,
    induced_multigraph,
    parse_edge_list,
    parse_graph6,
    underlying_simple,
)
from .matching import (
    extend_to_lm_matching,
    extends_to_lm_matching,
    is_lm_coverable,
    max_matching_with_forced,
    maximum_matching,
)

__all__ = [
    "BudgetExceededError",
    "CoherenceReport",
    "CompatibilityReport",
    "Covering",
    "CoveringError",
    "Edge",
    "EdgeColoring",
    "EnumerationCapError",
    "FormatError",
    "INFINITY",
    "IndexResult",
    "Matching",
    "Multigraph",
    "ParameterError",
    "PreconditionError",
    "SimpleGraph",
    "StructuralError",
    "chromatic_index",
    "coherence_report",
    "compatibility_function",
    "compatibility_index",
    "compatibility_report",
    "covering_from_json",
    "covering_induced_by_coloring",
    "covering_to_json",
    "delete_edge_instances",
    "encode_graph6",
    "equalize",
    "equalized_k_coloring",
    "exc_algorithm",
    "excessive_lm_index",
    "excessive_m_index",
    "extend_to_lm_matching",
    "extends_to_lm_matching",
    "find_k_edge_coloring",
    "format_edge_list",
    "induced_multigraph",
    "is_lm_compatible",
    "is_lm_coverable",
    "lm_index_via_pairs",
    "max_matching_with_forced",
    "maximum_matching",
    "optimal_m_bounded_coloring",
    "parse_edge_list",
    "parse_graph6",
    "underlying_simple",
    "verify_covering",
]
