"""Edge-Wiener and edge-hyper-Wiener indices of partial cubes via the cut method."""

from .benzenoid import (
    Benzenoid,
    algorithm1_edge_hyper_wiener,
    build_benzenoid,
    edge_wiener_benzenoid,
    elementary_cuts,
    quotient_trees,
    random_catacondensed,
    weighted_tree_wiener,
)
from .cutmethod import IndexReport, edge_hyper_wiener_cut, edge_wiener_cut, tree_edge_hyper_wiener, ww_star
from .errors import NotPartialCubeError
from .graph import Graph, generate_family
from .oracle import edge_indices_naive, line_graph, vertex_indices_naive
from .polyacene import closed_formulas, generate_polyacene
from .theta import certify_partial_cube, cut_side_table, theta_classes

__all__ = [
    "Benzenoid",
    "Graph",
    "IndexReport",
    "NotPartialCubeError",
    "algorithm1_edge_hyper_wiener",
    "build_benzenoid",
    "certify_partial_cube",
    "closed_formulas",
    "cut_side_table",
    "edge_hyper_wiener_cut",
    "edge_indices_naive",
    "edge_wiener_benzenoid",
    "edge_wiener_cut",
    "elementary_cuts",
    "generate_family",
    "generate_polyacene",
    "line_graph",
    "quotient_trees",
    "random_catacondensed",
    "theta_classes",
    "tree_edge_hyper_wiener",
    "vertex_indices_naive",
    "weighted_tree_wiener",
    "ww_star",
]
