"""The ``rho`` command: K4-free and C4-free edge partitions."""

import logging
from typing import Tuple

import click

from mvcolor.exceptions import ConstructionError, InputError, ScaleLimitError
from mvcolor.solvers.ramsey import (
    bipartite_sandwich_report,
    rho_bounds_from_ramsey,
    rho_rs_with_partition,
    rho_with_partition,
    sandwich_report,
    verify_c4free_partition,
    verify_k4free_partition,
)
from mvcolor.utils.decorators import handle_errors, verbose_option
from mvcolor.utils.records import RecordRun

logger = logging.getLogger(__name__)


def parse_sizes(text: str) -> Tuple[int, ...]:
    """``"n"`` or ``"r,s"`` as a tuple of positive integers."""
    try:
        sizes = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise InputError(f"Expected n or r,s, got '{text}'") from None
    if len(sizes) not in (1, 2) or min(sizes) < 1:
        raise InputError(f"Expected n or r,s with positive sizes, got '{text}'")
    return sizes


@click.command()
@click.argument("sizes")
@click.option(
    "--sandwich",
    is_flag=True,
    help="Also compute χ_μ and χ_μᵢ of the subdivided host and compare them with ρ",
)
@verbose_option
@click.pass_context
@handle_errors
def rho(ctx, verbose: int, sizes: str, sandwich: bool):
    """Fewest classes of a K4-free partition of E(K_n), or C4-free of E(K_{r,s}).

    Beyond the exhaustive-search limit for K_n the known Ramsey bounds are reported.

    Examples:
        mvcolor rho 6
        mvcolor rho 3,3
        mvcolor rho 4 --sandwich
    """
    parsed = parse_sizes(sizes)
    run = RecordRun(ctx, "rho", {"sizes": list(parsed), "sandwich": sandwich})
    search = run.config.search

    if len(parsed) == 1:
        n = parsed[0]
        try:
            value, partition = rho_with_partition(
                n, run.budget, max_complete=search.ramsey_max_complete
            )
        except ScaleLimitError as e:
            lower, upper = rho_bounds_from_ramsey(n)
            logger.info("%s; falling back to Ramsey bounds", e.message)
            run.value("rho_lower", lower, "bound")
            run.value("rho_upper", upper, "bound")
            run.emit()
            return
        violation = verify_k4free_partition(partition)
    else:
        r, s = parsed
        value, partition = rho_rs_with_partition(
            r, s, run.budget, max_edges=search.ramsey_max_biclique_edges
        )
        violation = verify_c4free_partition(partition)

    if violation is not None:
        raise ConstructionError(f"Search returned a partition with a monochromatic {violation}")
    run.value("rho", value)
    run.witness("partition", partition.model_dump())

    if sandwich:
        report = (
            sandwich_report(parsed[0], run.budget)
            if len(parsed) == 1
            else bipartite_sandwich_report(*parsed, budget=run.budget)
        )
        run.value("chi_mu", report.chi_mu)
        run.value("chi_mu_i", report.chi_mu_i)
        run.value("lower_chain_holds", report.lower_holds)
        run.value("upper_asserted", report.upper_asserted)
        run.value("sandwich_holds", report.holds)
        run.value("meets_rho_plus_one", report.meets_rho_plus_one)
        run.emit("ok" if report.holds else "anomaly")
        return
    run.emit()
