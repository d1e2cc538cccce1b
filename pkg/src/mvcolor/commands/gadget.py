"""Reduction gadgets for the hardness of μᵢ and χ_μᵢ."""

from typing import Optional

import click

from mvcolor.core.edgelist import format_edge_list, write_atomic
from mvcolor.exceptions import InputError
from mvcolor.hardness import (
    build_corona_reduction,
    build_sat_gadget,
    figure_instance,
    gadget_check,
    verify_corona_reduction,
    verify_sat_reduction,
)
from mvcolor.utils.decorators import handle_errors, verbose_option
from mvcolor.utils.inputs import load_cnf, load_graph
from mvcolor.utils.records import RecordRun


@click.group()
def gadget():
    """Build (and optionally verify) reduction gadgets."""
    pass


@gadget.command()
@click.argument("cnf", required=False, type=click.Path(exists=True, dir_okay=False))
@click.option("--figure", is_flag=True, help="Use the built-in four-variable example formula")
@click.option("--verify", is_flag=True, help="Decide SAT(f) and compare μᵢ with α exhaustively")
@click.option("--output", "-o", type=click.Path(dir_okay=False), help="Write the edge list here")
@verbose_option
@click.pass_context
@handle_errors
def sat(
    ctx, verbose: int, cnf: Optional[str], figure: bool, verify: bool, output: Optional[str]
):
    """Graph G_f with SAT(f) iff μᵢ(G_f) = α(G_f), from a DIMACS CNF file.

    Examples:
        mvcolor gadget sat formula.cnf -o gadget.txt
        mvcolor gadget sat formula.cnf --verify
        mvcolor gadget sat --figure
    """
    if figure == bool(cnf):
        raise InputError("Pass exactly one of a CNF file or --figure")
    formula = figure_instance() if figure else load_cnf(cnf)
    g = build_sat_gadget(formula)
    if output:
        write_atomic(output, format_edge_list(g))

    run = RecordRun(ctx, "gadget sat", {"cnf": cnf or "figure", "verify": verify})
    check = gadget_check(formula, g)
    run.value("order", g.n)
    run.value("size", g.m)
    run.value("diameter", check.diameter)
    run.value("structure_ok", check.ok)
    if not verify:
        run.emit("ok" if check.ok else "anomaly")
        return

    search = run.config.search
    report = verify_sat_reduction(formula, search.sat_max_vars, search.sat_max_clauses, run.budget)
    run.value("satisfiable", report.satisfiable)
    run.value("alpha", report.alpha)
    run.value("mu_i", report.mu_i)
    run.value("reduction_holds", report.holds)
    run.value("extension", report.extension)
    run.witness("assignment", report.assignment)
    run.witness("alpha", report.alpha_witness)
    run.witness("mu_i", report.mu_i_witness)
    if report.imv_from_assignment:
        run.witness("imv_from_assignment", report.imv_from_assignment)
    run.emit("ok" if report.holds and check.ok else "anomaly")


@gadget.command()
@click.argument("graph")
@click.option(
    "--verify", is_flag=True, help="Check μᵢ and χ_μᵢ of K_1 ⊙ H against α(H) and χ(H)+1"
)
@click.option("--output", "-o", type=click.Path(dir_okay=False), help="Write the edge list here")
@verbose_option
@click.pass_context
@handle_errors
def corona(ctx, verbose: int, graph: str, verify: bool, output: Optional[str]):
    """The corona K_1 ⊙ H of a graph H.

    Examples:
        mvcolor gadget corona cycle:5 --verify
        mvcolor gadget corona petersen -o corona.txt
    """
    h = load_graph(graph)
    g = build_corona_reduction(h)
    if output:
        write_atomic(output, format_edge_list(g))

    run = RecordRun(ctx, "gadget corona", {"graph": graph, "verify": verify})
    run.value("order", g.n)
    run.value("size", g.m)
    if not verify:
        run.emit()
        return

    report = verify_corona_reduction(h, run.config.search.brute_force_max_order, run.budget)
    run.value("alpha", report.alpha)
    run.value("chi", report.chi)
    run.value("mu_i", report.mu_i)
    run.value("chi_mu_i", report.chi_mu_i)
    run.value("reduction_holds", report.holds)
    run.emit("ok" if report.holds else "anomaly")
