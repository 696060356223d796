"""Certified 7-coloring (and K_t lifting) for (2K2, K3+K1, C5+K1, K6)-free graphs."""

from .graph import Graph, build_graph, complement, compose, join, disjoint_union
from .oracle import Coloring, check_coloring, chromatic_number, clique_number, k_colorable

__version__ = "0.1.0"

__all__ = [
    "Coloring", "Graph", "build_graph", "check_coloring", "chromatic_number", "clique_number",
    "complement", "compose", "disjoint_union", "join", "k_colorable",
]
