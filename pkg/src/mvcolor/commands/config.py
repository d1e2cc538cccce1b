"""Config CLI commands."""

import sys
from pathlib import Path

import click
from rich.console import Console

from mvcolor.config import MvColorConfig, get_config
from mvcolor.utils.decorators import handle_errors
from mvcolor.utils.output import format_output

console = Console()
console_err = Console(stderr=True)

LOCAL_CONFIG = Path(".mvcolor/config.yaml")


def _global_config() -> Path:
    return Path.home() / ".mvcolor/config.yaml"


@click.group()
def config_cmd():
    """Configuration management commands."""
    pass


@config_cmd.command()
@click.option("--node-budget", type=int, help="Search node budget")
@click.option("--global", "global_config", is_flag=True, help="Create global config")
@handle_errors
def init(node_budget: int, global_config: bool):
    """Initialize configuration file.

    Examples:
        mvcolor config init
        mvcolor config init --node-budget 1000000
        mvcolor config init --global
    """
    config = MvColorConfig()
    if node_budget:
        config.set("search.node_budget", node_budget)

    path = _global_config() if global_config else LOCAL_CONFIG
    config.save(path=path)
    console.print(f"[green]✓[/green] Configuration created at: {path}")


@config_cmd.command()
@click.option(
    "--format", "output_format", default="table", type=click.Choice(["table", "json", "yaml"])
)
@click.pass_context
@handle_errors
def show(ctx, output_format: str):
    """Show current configuration.

    Examples:
        mvcolor config show
        mvcolor config show --format json
    """
    root = ctx.find_root().obj or {}
    config = root.get("config") or get_config()
    config_dict = config.model_dump()

    if output_format in ("json", "yaml"):
        click.echo(format_output(config_dict, output_format).rstrip("\n"))
        return
    for section, values in config_dict.items():
        if not isinstance(values, dict):
            console.print(f"[bold]{section}:[/bold] {values}")
            continue
        console.print(f"\n[bold]{section}:[/bold]")
        for key, value in values.items():
            console.print(f"  {key}: {value}")


@config_cmd.command()
@click.argument("key")
@click.argument("value")
@click.option("--global", "global_config", is_flag=True, help="Set in global config")
@handle_errors
def set(key: str, value: str, global_config: bool):
    """Set configuration value.

    Examples:
        mvcolor config set search.node_budget 1000000
        mvcolor config set defaults.output_format table --global
    """
    config_path = _global_config() if global_config else LOCAL_CONFIG
    config = MvColorConfig.load(config_path) if config_path.exists() else MvColorConfig()

    parsed_value = _parse_config_value(value)
    config.set(key, parsed_value)
    config.save(path=config_path)
    console.print(f"[green]✓[/green] Set {key} = {parsed_value}")


@config_cmd.command()
@click.argument("key")
@handle_errors
def get(key: str):
    """Get configuration value.

    Examples:
        mvcolor config get search.node_budget
    """
    value = get_config().get(key)
    if value is None:
        console_err.print(f"[yellow]Key '{key}' not found[/yellow]")
        sys.exit(1)
    click.echo(value)


def _parse_config_value(value: str):
    """Parse configuration value to appropriate type."""
    try:
        return int(value)
    except ValueError:
        pass

    if value.lower() in ("true", "yes"):
        return True
    if value.lower() in ("false", "no"):
        return False

    return value
