"""Graph representation and geodesic machinery."""

from mvcolor.core.budget import NodeBudget
from mvcolor.core.edgelist import format_edge_list, parse_edge_list, read_edge_list, to_dot
from mvcolor.core.geodesic import (
    INFINITE,
    DistanceMatrix,
    GeodesicCounts,
    GeodesicIndex,
    bfs_all_pairs,
    diag,
    diameter,
    geodesic_index,
    geodesic_path,
    interval,
    is_convex,
    longest_convex_path,
)
from mvcolor.core.graph import Graph, ProductInfo
from mvcolor.core.vertexset import VertexSet

__all__ = [
    "INFINITE",
    "DistanceMatrix",
    "GeodesicCounts",
    "GeodesicIndex",
    "Graph",
    "NodeBudget",
    "ProductInfo",
    "VertexSet",
    "bfs_all_pairs",
    "diag",
    "diameter",
    "format_edge_list",
    "geodesic_index",
    "geodesic_path",
    "interval",
    "is_convex",
    "longest_convex_path",
    "parse_edge_list",
    "read_edge_list",
    "to_dot",
]
