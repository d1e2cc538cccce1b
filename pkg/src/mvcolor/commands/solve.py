"""Exact invariant computation."""

import click

from mvcolor.exceptions import ValidationError
from mvcolor.solvers.chromatic import (
    chi,
    chi_defective1,
    chi_mu,
    chi_mu_i,
    validate_coloring,
)
from mvcolor.solvers.visibility import alpha, is_imv_set, is_mv_set, mu, mu_i, omega
from mvcolor.utils.decorators import handle_errors, verbose_option
from mvcolor.utils.inputs import load_graph
from mvcolor.utils.records import RecordRun

SET_PARAMS = {
    "mu": (mu, is_mv_set),
    "mui": (mu_i, is_imv_set),
    "alpha": (alpha, lambda g, s: g.is_independent(sum(1 << v for v in s))),
    "omega": (omega, lambda g, s: g.is_clique(sum(1 << v for v in s))),
}

COLORING_PARAMS = {
    "chi": ("proper", lambda g, budget, shortcuts: chi(g, budget)),
    "chi1": ("defective1", lambda g, budget, shortcuts: chi_defective1(g, budget)),
    "chimu": ("mv", lambda g, budget, shortcuts: chi_mu(g, budget, shortcuts)),
    "chimui": ("imv", lambda g, budget, shortcuts: chi_mu_i(g, budget, shortcuts)),
}


@click.command()
@click.argument("graph")
@click.option(
    "--param",
    "-p",
    required=True,
    type=click.Choice(list(SET_PARAMS) + list(COLORING_PARAMS)),
    help="Invariant to compute",
)
@click.option(
    "--no-shortcuts",
    is_flag=True,
    help="Search from the plain clique floor instead of the structural lower bounds",
)
@verbose_option
@click.pass_context
@handle_errors
def solve(ctx, verbose: int, graph: str, param: str, no_shortcuts: bool):
    """Compute an invariant exactly, with a witness.

    Examples:
        mvcolor solve cycle:9 --param chimui
        mvcolor solve petersen -p mu
    """
    g = load_graph(graph)
    run = RecordRun(ctx, "solve", {"graph": graph, "param": param})

    if param in SET_PARAMS:
        solver, check = SET_PARAMS[param]
        result = solver(g, run.budget)
        if not check(g, result.witness):
            raise ValidationError(f"Witness for {param} failed re-validation")
        run.value(param, result.value)
        run.witness("set", result.witness)
    else:
        mode, solver = COLORING_PARAMS[param]
        k, coloring = solver(g, run.budget, not no_shortcuts)
        report = validate_coloring(g, coloring, mode)
        if not report.valid:
            raise ValidationError(
                f"Witness for {param} failed re-validation",
                details=report.violation.reason if report.violation else None,
            )
        run.value(param, k)
        run.witness("classes", coloring.sorted_classes())
    run.emit()
