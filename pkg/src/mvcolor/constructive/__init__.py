"""Closed-form colorings; each result is validated before it is returned."""

from mvcolor.constructive.cycles import cycle_imv
from mvcolor.constructive.defective import defective_to_mv
from mvcolor.constructive.products import (
    cartesian_prism_mv,
    lex_imv,
    lex_mv_2coloring,
    product_coloring,
    render_grid,
    render_grid_text,
    strong_paths_imv,
    strong_paths_mv,
)
from mvcolor.constructive.subdivision import subdiv_imv_from_partition
from mvcolor.constructive.trees import tree_exchange
from mvcolor.constructive.trianglefree import sharpness_coloring, trianglefree_imv

__all__ = [
    "cartesian_prism_mv",
    "cycle_imv",
    "defective_to_mv",
    "lex_imv",
    "lex_mv_2coloring",
    "product_coloring",
    "render_grid",
    "render_grid_text",
    "sharpness_coloring",
    "strong_paths_imv",
    "strong_paths_mv",
    "subdiv_imv_from_partition",
    "tree_exchange",
    "trianglefree_imv",
]
