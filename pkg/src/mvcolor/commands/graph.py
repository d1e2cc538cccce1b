"""Graph construction, statistics and export commands."""

from typing import Optional

import click

from mvcolor.core.edgelist import format_edge_list, to_dot, write_atomic
from mvcolor.core.geodesic import diameter
from mvcolor.solvers.visibility import alpha, omega
from mvcolor.utils.decorators import handle_errors, verbose_option
from mvcolor.utils.inputs import load_coloring, load_graph
from mvcolor.utils.records import RecordRun


def _write_or_echo(text: str, output: Optional[str]) -> None:
    if output:
        write_atomic(output, text)
    else:
        click.echo(text, nl=False)


@click.command()
@click.argument("spec")
@click.option("--output", "-o", type=click.Path(dir_okay=False), help="Write to a file")
@verbose_option
@handle_errors
def build(verbose: int, spec: str, output: Optional[str]):
    """Build a graph from a family spec and print its edge list.

    Examples:
        mvcolor build cycle:9
        mvcolor build "strong(path:8,path:8)" -o grid.txt
    """
    _write_or_echo(format_edge_list(load_graph(spec)), output)


@click.command()
@click.argument("graph")
@verbose_option
@click.pass_context
@handle_errors
def stats(ctx, verbose: int, graph: str):
    """Order, size, diameter, α, ω and Δ of a graph.

    Examples:
        mvcolor stats petersen
        mvcolor stats graph.txt
    """
    g = load_graph(graph)
    run = RecordRun(ctx, "stats", {"graph": graph})
    connected = g.is_connected()
    run.value("n", g.n)
    run.value("m", g.m)
    run.value("connected", connected)
    run.value("diameter", diameter(g) if connected else None)
    run.value("max_degree", g.max_degree())
    independent = alpha(g, run.budget)
    clique = omega(g, run.budget)
    run.value("alpha", independent.value)
    run.value("omega", clique.value)
    run.value("bipartite", g.is_bipartite())
    run.witness("alpha", independent.witness)
    run.witness("omega", clique.witness)
    run.emit()


@click.command()
@click.argument("graph")
@click.option("--dot", "as_dot", is_flag=True, help="Export DOT instead of an edge list")
@click.option(
    "--coloring",
    "coloring_path",
    type=click.Path(exists=True, dir_okay=False),
    help="JSON coloring whose classes become the DOT color attribute",
)
@click.option("--no-labels", is_flag=True, help="Omit vertex labels from DOT output")
@click.option("--output", "-o", type=click.Path(dir_okay=False), help="Write to a file")
@verbose_option
@handle_errors
def export(
    verbose: int,
    graph: str,
    as_dot: bool,
    coloring_path: Optional[str],
    no_labels: bool,
    output: Optional[str],
):
    """Export a graph as an edge list or as DOT.

    Examples:
        mvcolor export cycle:6 --dot
        mvcolor export petersen --dot --coloring coloring.json -o petersen.dot
    """
    g = load_graph(graph)
    if not as_dot:
        _write_or_echo(format_edge_list(g), output)
        return
    classes = load_coloring(coloring_path, g).sorted_classes() if coloring_path else None
    _write_or_echo(to_dot(g, classes, with_labels=not no_labels), output)
