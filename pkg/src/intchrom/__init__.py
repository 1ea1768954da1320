"""Exact interleaved multichromatic numbers via acyclic orientations."""

from .config import Caps, CapExceeded
from .cycles import SimpleCycle, direction_counts, enumerate_simple_cycles
from .evaluators import IntWitness, chi_int_star, chi_via_orientations, format_ratio, orientation_score
from .graph import Graph, GraphFormatError, components, is_forest, parse_graph, serialize_graph
from .lexproduct import (
    KTupleColoring,
    LayeredOrientation,
    ProductGraph,
    build_product,
    check_lemma3,
    chi_int_k,
    derive_interleaved_coloring,
    layered_orientation,
    winding_path,
)
from .orientations import AcyclicOrientation, enumerate_acyclic, is_acyclic, longest_path, sinks, sources

__all__ = [
    "AcyclicOrientation",
    "CapExceeded",
    "Caps",
    "Graph",
    "GraphFormatError",
    "IntWitness",
    "KTupleColoring",
    "LayeredOrientation",
    "ProductGraph",
    "SimpleCycle",
    "build_product",
    "check_lemma3",
    "chi_int_k",
    "chi_int_star",
    "chi_via_orientations",
    "components",
    "derive_interleaved_coloring",
    "direction_counts",
    "enumerate_acyclic",
    "enumerate_simple_cycles",
    "format_ratio",
    "is_acyclic",
    "is_forest",
    "layered_orientation",
    "longest_path",
    "orientation_score",
    "parse_graph",
    "serialize_graph",
    "sinks",
    "sources",
    "winding_path",
]
