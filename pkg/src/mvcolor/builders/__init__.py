"""Graph families, products and the FamilySpec syntax."""

from mvcolor.builders.corpus import (
    all_graphs,
    connected_graphs,
    random_connected_graph,
    random_triangle_free,
    sampled_graphs,
)
from mvcolor.builders.families import (
    biclique,
    complete_graph,
    cycle_graph,
    empty_graph,
    path_graph,
    petersen,
    random_tree,
    sharpness_gadget,
    star,
    trees_of_order,
)
from mvcolor.builders.products import (
    cartesian,
    coordinates,
    corona,
    corona_copy,
    direct,
    factors,
    fiber,
    hamming,
    is_isomorphic,
    lex,
    strong,
    subdivision,
    subdivision_vertex,
)
from mvcolor.builders.spec import FamilySpec, build, parse_spec

__all__ = [
    "FamilySpec",
    "all_graphs",
    "biclique",
    "build",
    "cartesian",
    "complete_graph",
    "connected_graphs",
    "coordinates",
    "corona",
    "corona_copy",
    "cycle_graph",
    "direct",
    "empty_graph",
    "factors",
    "fiber",
    "hamming",
    "is_isomorphic",
    "lex",
    "parse_spec",
    "path_graph",
    "petersen",
    "random_connected_graph",
    "random_triangle_free",
    "random_tree",
    "sampled_graphs",
    "sharpness_gadget",
    "star",
    "strong",
    "subdivision",
    "subdivision_vertex",
    "trees_of_order",
]
