"""Acceptance suites and the output schema."""

import json

import click

from mvcolor.exceptions import ValidationError
from mvcolor.models.results import ResultRecord
from mvcolor.suites import run_suite, suite_names
from mvcolor.utils.decorators import handle_errors, verbose_option
from mvcolor.utils.output import OutputFormatter, console
from mvcolor.utils.records import current_config


@click.command()
@click.option(
    "--suite", "-s", "name", default="all", type=click.Choice(suite_names()), help="Suite to run"
)
@verbose_option
@click.pass_context
@handle_errors
def verify(ctx, verbose: int, name: str):
    """Run desk-scale acceptance checks; exits 2 if any check fails.

    Examples:
        mvcolor verify --suite cycles
        mvcolor verify -s all --output-format table
    """
    config = current_config(ctx)
    reports = run_suite(name, config.search.node_budget)
    formatter = OutputFormatter(config.defaults.output_format)

    if config.defaults.output_format == "table":
        rows = [
            {"suite": r.suite, "check": c.name, "passed": c.passed, "detail": c.detail}
            for r in reports
            for c in r.checks
        ]
        formatter.print(rows, columns=["suite", "check", "passed", "detail"])
        failed = sum(not r.passed for r in reports)
        console.print(f"[dim]{len(reports) - failed}/{len(reports)} suites passed[/dim]")
    else:
        formatter.print(reports)

    if not all(r.passed for r in reports):
        ctx.exit(ValidationError.exit_code)


@click.command()
def schema():
    """Print the JSON schema of the records every command emits."""
    click.echo(json.dumps(ResultRecord.model_json_schema(), indent=2))
