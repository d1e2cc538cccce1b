"""Validation of user-supplied colorings and vertex sets."""

import click

from mvcolor.core.bits import mask_of
from mvcolor.exceptions import ValidationError
from mvcolor.solvers.chromatic import MODES, validate_coloring
from mvcolor.solvers.visibility import first_invisible_pair
from mvcolor.utils.decorators import handle_errors, verbose_option
from mvcolor.utils.inputs import load_coloring, load_graph, load_vertex_set
from mvcolor.utils.records import RecordRun


@click.command()
@click.argument("graph")
@click.option(
    "--coloring",
    "coloring_path",
    required=True,
    type=click.Path(exists=True, dir_okay=False),
    help="JSON coloring (classes, assignment or a list of lists)",
)
@click.option("--mode", "-m", required=True, type=click.Choice(list(MODES)), help="Class rule")
@verbose_option
@click.pass_context
@handle_errors
def check(ctx, verbose: int, graph: str, coloring_path: str, mode: str):
    """Validate a coloring; exits 2 when a class breaks the mode.

    Examples:
        mvcolor check "subdivision(complete:4)" --coloring fig1.json --mode imv
        mvcolor check cycle:9 --coloring c9.json -m mv
    """
    g = load_graph(graph)
    coloring = load_coloring(coloring_path, g)
    run = RecordRun(ctx, "check", {"graph": graph, "coloring": coloring_path, "mode": mode})
    report = validate_coloring(g, coloring, mode)
    run.value("valid", report.valid)
    run.value("classes", report.k)
    if report.violation is not None:
        run.witness("violation", report.violation.model_dump())
    run.emit("ok" if report.valid else "invalid")
    if not report.valid:
        ctx.exit(ValidationError.exit_code)


@click.command("check-set")
@click.argument("graph")
@click.option(
    "--set",
    "set_path",
    required=True,
    type=click.Path(exists=True, dir_okay=False),
    help="Vertex set as JSON or whitespace-separated integers",
)
@click.option("--mode", "-m", default="mv", type=click.Choice(["mv", "imv"]), help="Set rule")
@verbose_option
@click.pass_context
@handle_errors
def check_set(ctx, verbose: int, graph: str, set_path: str, mode: str):
    """Check that a vertex set is MV (or IMV); exits 2 otherwise.

    Examples:
        mvcolor check-set petersen --set s.txt
        mvcolor check-set cycle:9 --set s.json --mode imv
    """
    g = load_graph(graph)
    members = load_vertex_set(set_path, g)
    run = RecordRun(ctx, "check-set", {"graph": graph, "set": set_path, "mode": mode})
    mask = mask_of(members)
    adjacent = None
    if mode == "imv":
        adjacent = next(((u, v) for u, v in g.edges() if mask >> u & 1 and mask >> v & 1), None)
    hidden = first_invisible_pair(g, mask)
    valid = adjacent is None and hidden is None
    run.value("size", len(members))
    run.value("valid", valid)
    if adjacent is not None:
        run.witness("adjacent_pair", list(adjacent))
    if hidden is not None:
        run.witness("invisible_pair", list(hidden))
    run.emit("ok" if valid else "invalid")
    if not valid:
        ctx.exit(ValidationError.exit_code)
