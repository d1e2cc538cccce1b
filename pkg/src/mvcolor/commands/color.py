"""Closed-form colorings by theorem tag."""

import math
from typing import Callable, Dict, Optional

import click

from mvcolor.builders.families import complete_graph, cycle_graph, path_graph
from mvcolor.builders.products import factors, subdivision
from mvcolor.constructive import (
    cartesian_prism_mv,
    cycle_imv,
    defective_to_mv,
    lex_imv,
    lex_mv_2coloring,
    render_grid,
    render_grid_text,
    strong_paths_imv,
    strong_paths_mv,
    subdiv_imv_from_partition,
    tree_exchange,
    trianglefree_imv,
)
from mvcolor.core.graph import Graph
from mvcolor.exceptions import PreconditionError
from mvcolor.models.coloring import ConstructedColoring
from mvcolor.solvers.chromatic import chi_defective1, chi_mu, chi_mu_i
from mvcolor.solvers.ramsey import rho_with_partition
from mvcolor.utils.decorators import handle_errors, verbose_option
from mvcolor.utils.inputs import load_coloring, load_graph, load_partition, load_vertex_set
from mvcolor.utils.records import RecordRun


class _Inputs:
    """Optional files passed to ``color`` plus the run's budget."""

    def __init__(
        self,
        run: RecordRun,
        coloring: Optional[str],
        vertex_set: Optional[str],
        partition: Optional[str],
    ):
        self.run = run
        self.coloring = coloring
        self.vertex_set = vertex_set
        self.partition = partition


def _product_of(g: Graph, kind: str, tag: str):
    if g.product is None or g.product.kind != kind:
        raise PreconditionError(
            f"{tag} needs a {kind} product",
            suggestion=f"Pass the graph as a family spec, e.g. {kind}(path:3,cycle:4)",
        )
    return factors(g)


def _grid_sides(g: Graph, tag: str):
    left, right = _product_of(g, "strong", tag)
    if not (left.same_edges(path_graph(left.n)) and right.same_edges(path_graph(right.n))):
        raise PreconditionError(f"{tag} needs a strong product of two paths")
    return left.n, right.n


def _cycle(g: Graph, inputs: _Inputs) -> ConstructedColoring:
    if g.n < 3 or not g.same_edges(cycle_graph(g.n)):
        raise PreconditionError(
            "cycle-imv needs the cycle 0-1-...-(n-1)-0", suggestion="Use cycle:n"
        )
    return cycle_imv(g.n)


def _tree(g: Graph, inputs: _Inputs) -> ConstructedColoring:
    if inputs.coloring:
        start = load_coloring(inputs.coloring, g)
    else:
        _, start = chi_mu(g, inputs.run.budget)
    return tree_exchange(g, start)


def _trianglefree(g: Graph, inputs: _Inputs) -> ConstructedColoring:
    members = load_vertex_set(inputs.vertex_set, g) if inputs.vertex_set else None
    return trianglefree_imv(g, members)


def _prism(g: Graph, inputs: _Inputs) -> ConstructedColoring:
    left, right = _product_of(g, "cartesian", "prism-mv")
    if not right.is_complete():
        raise PreconditionError("prism-mv needs G □ K_n with a complete right factor")
    if inputs.coloring:
        imv = load_coloring(inputs.coloring, left)
    else:
        _, imv = chi_mu_i(left, inputs.run.budget)
    return cartesian_prism_mv(left, right.n, imv)


def _subdivided_order(g: Graph) -> int:
    # n + n(n-1)/2 vertices for S(K_n)
    n = int((math.isqrt(8 * g.n + 1) - 1) // 2)
    if n < 2 or n + n * (n - 1) // 2 != g.n or not g.same_edges(subdivision(complete_graph(n))):
        raise PreconditionError(
            "subdiv-imv needs S(K_n)", suggestion="Use subdivision(complete:n)"
        )
    return n


def _subdiv(g: Graph, inputs: _Inputs) -> ConstructedColoring:
    n = _subdivided_order(g)
    if inputs.partition:
        partition = load_partition(inputs.partition)
    else:
        _, partition = rho_with_partition(
            n, inputs.run.budget, max_complete=inputs.run.config.search.ramsey_max_complete
        )
    return subdiv_imv_from_partition(n, partition)


def _defective(g: Graph, inputs: _Inputs) -> ConstructedColoring:
    if inputs.coloring:
        start = load_coloring(inputs.coloring, g)
    else:
        _, start = chi_defective1(g, inputs.run.budget)
    return defective_to_mv(g, start)


THEOREMS: Dict[str, Callable[[Graph, _Inputs], ConstructedColoring]] = {
    "cycle-imv": _cycle,
    "tree-exchange": _tree,
    "tfree-imv": _trianglefree,
    "lex-mv2": lambda g, inputs: lex_mv_2coloring(g),
    "lex-imv": lambda g, inputs: lex_imv(g),
    "prism-mv": _prism,
    "strongpaths-imv": lambda g, inputs: strong_paths_imv(*_grid_sides(g, "strongpaths-imv")),
    "strongpaths-mv": lambda g, inputs: strong_paths_mv(*_grid_sides(g, "strongpaths-mv")),
    "subdiv-imv": _subdiv,
    "defective-mv": _defective,
}


@click.command()
@click.argument("graph")
@click.option(
    "--theorem", "-t", required=True, type=click.Choice(list(THEOREMS)), help="Construction"
)
@click.option(
    "--coloring",
    "coloring_path",
    type=click.Path(exists=True, dir_okay=False),
    help="Starting coloring (tree-exchange, prism-mv, defective-mv)",
)
@click.option(
    "--set",
    "set_path",
    type=click.Path(exists=True, dir_okay=False),
    help="Maximum IMV set (tfree-imv)",
)
@click.option(
    "--partition",
    "partition_path",
    type=click.Path(exists=True, dir_okay=False),
    help="K4-free edge partition as JSON (subdiv-imv)",
)
@click.option("--grid", is_flag=True, help="Also print strong-grid colorings as a matrix")
@verbose_option
@click.pass_context
@handle_errors
def color(
    ctx,
    verbose: int,
    graph: str,
    theorem: str,
    coloring_path: Optional[str],
    set_path: Optional[str],
    partition_path: Optional[str],
    grid: bool,
):
    """Run a closed-form coloring and validate it.

    Examples:
        mvcolor color cycle:9 --theorem cycle-imv
        mvcolor color "strong(path:12,path:12)" -t strongpaths-imv --grid
    """
    g = load_graph(graph)
    run = RecordRun(ctx, "color", {"graph": graph, "theorem": theorem})
    built = THEOREMS[theorem](g, _Inputs(run, coloring_path, set_path, partition_path))

    run.value("classes", built.k, "constructed")
    run.value("claimed", built.claimed_k, "bound")
    for name, value in built.notes.items():
        run.value(name, value, "exact")
    run.witness("coloring", built.coloring.sorted_classes())
    sides = _grid_sides(g, theorem) if theorem.startswith("strongpaths") else None
    if sides:
        run.witness("grid", render_grid(built.coloring, *sides))
    run.emit("anomaly" if built.anomaly else "ok")
    if grid and sides:
        click.echo(render_grid_text(built.coloring, *sides))
