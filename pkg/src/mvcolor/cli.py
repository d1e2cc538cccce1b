"""Main CLI entry point for mvcolor."""

import sys
from pathlib import Path

import click
from rich.console import Console

from mvcolor import __version__
from mvcolor.commands.check import check, check_set
from mvcolor.commands.color import color
from mvcolor.commands.config import config_cmd
from mvcolor.commands.gadget import gadget
from mvcolor.commands.graph import build, export, stats
from mvcolor.commands.ramsey import rho
from mvcolor.commands.solve import solve
from mvcolor.commands.verify import schema, verify
from mvcolor.config import OUTPUT_FORMATS, get_config
from mvcolor.exceptions import MvColorError
from mvcolor.utils.decorators import report_error, setup_logging, verbose_option

console = Console()
console_err = Console(stderr=True)


@click.group()
@click.version_option(version=__version__, prog_name="mvcolor")
@click.option(
    "--config", "config_path", type=click.Path(exists=True), help="Path to configuration file"
)
@click.option(
    "--output-format",
    "output_format",
    type=click.Choice(list(OUTPUT_FORMATS)),
    help="Output format (overrides config)",
)
@click.option("--node-budget", type=click.IntRange(min=1), help="Search node budget")
@verbose_option
@click.pass_context
def cli(ctx, config_path, output_format, node_budget, verbose):
    """mvcolor - mutual-visibility sets and colorings of graphs.

    Graphs are given as family specs (cycle:9, strong(path:4,path:5),
    subdivision(complete:4), ...) or as edge-list files.

    \b
    Examples:
        mvcolor solve cycle:9 --param chimui
        mvcolor color "strong(path:12,path:12)" --theorem strongpaths-imv
        mvcolor verify --suite cycles
    """
    if ctx.obj is None:
        ctx.obj = {}

    try:
        config = get_config(Path(config_path) if config_path else None)
        if output_format:
            config.defaults.output_format = output_format
        if node_budget:
            config.search.node_budget = node_budget
    except MvColorError as e:
        report_error(e)
        sys.exit(e.exit_code)

    if not verbose:
        setup_logging(config.logging.level)
    ctx.obj["config"] = config


cli.add_command(build)
cli.add_command(stats)
cli.add_command(export)
cli.add_command(solve)
cli.add_command(color)
cli.add_command(check)
cli.add_command(check_set)
cli.add_command(rho)
cli.add_command(gadget)
cli.add_command(verify)
cli.add_command(schema)
cli.add_command(config_cmd, name="config")


def main():
    """Main entry point."""
    try:
        cli()
    except MvColorError as e:
        report_error(e)
        sys.exit(e.exit_code)
    except KeyboardInterrupt:
        console.print("\n[yellow]Interrupted[/yellow]")
        sys.exit(130)
    except Exception as e:
        console_err.print(f"[red]Unexpected error:[/red] {e}")
        if "--verbose" in sys.argv or "-v" in sys.argv:
            import traceback

            console_err.print(traceback.format_exc())
        sys.exit(1)


if __name__ == "__main__":
    main()
