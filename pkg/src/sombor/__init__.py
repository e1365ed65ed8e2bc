"""Sombor index and coindex of simple graphs, with exhaustive audits of their bounds."""

from .graph import (
    DegreeStats,
    Graph,
    build_graph,
    cartesian_product,
    complement,
    composition,
    degree_stats,
    enumerate_labeled_graphs,
    graph_join,
    graph_union,
    non_edges,
)
from .families import Family, FamilySpec, generate_family
from .invariants import (
    IndexVector,
    compute_all,
    first_zagreb,
    first_zagreb_coindex,
    forgotten_coindex,
    forgotten_index,
    general_first_zagreb,
    second_zagreb,
    second_zagreb_coindex,
    sombor_coindex,
    sombor_index,
)
from .closed_forms import ClosedFormResult, Variant, closed_sombor_coindex, closed_sombor_index, regular_coindex
from .bounds import TheoremId
from .audit import AuditReport, BoundRecord, audit_graph, find_counterexamples
from .graphio import encode_graph6, parse_edge_list, parse_graph6, write_reports

__version__ = "0.1.0"

__all__ = [
    "DegreeStats",
    "Graph",
    "build_graph",
    "cartesian_product",
    "complement",
    "composition",
    "degree_stats",
    "enumerate_labeled_graphs",
    "graph_join",
    "graph_union",
    "non_edges",
    "Family",
    "FamilySpec",
    "generate_family",
    "IndexVector",
    "compute_all",
    "first_zagreb",
    "first_zagreb_coindex",
    "forgotten_coindex",
    "forgotten_index",
    "general_first_zagreb",
    "second_zagreb",
    "second_zagreb_coindex",
    "sombor_coindex",
    "sombor_index",
    "ClosedFormResult",
    "Variant",
    "closed_sombor_coindex",
    "closed_sombor_index",
    "regular_coindex",
    "TheoremId",
    "AuditReport",
    "BoundRecord",
    "audit_graph",
    "find_counterexamples",
    "encode_graph6",
    "parse_edge_list",
    "parse_graph6",
    "write_reports",
]
