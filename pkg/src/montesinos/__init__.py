"""Exact edgepath computations for boundary slopes of Montesinos knots."""
from .farey import DiagramError, is_farey_pair, parents, partial_edge_length, r_value
from .edgepath import Edgepath, enumerate_basic_edgepaths, monotone_basic_edgepath, path_twist
from .system import EdgepathSystem, KnotSpec, candidate_systems, enumerate_basic_systems
from .essentiality import essentiality, special_system_filter
from .invariants import component_count, seifert_offset, twist, twist_by_integration
from .theorems import classify_case, crossing_number, diameter, knot_report

__all__ = [
    "DiagramError", "is_farey_pair", "parents", "partial_edge_length", "r_value",
    "Edgepath", "enumerate_basic_edgepaths", "monotone_basic_edgepath", "path_twist",
    "EdgepathSystem", "KnotSpec", "candidate_systems", "enumerate_basic_systems",
    "essentiality", "special_system_filter",
    "component_count", "seifert_offset", "twist", "twist_by_integration",
    "classify_case", "crossing_number", "diameter", "knot_report",
]
