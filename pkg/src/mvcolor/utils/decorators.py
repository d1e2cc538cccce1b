"""Common CLI decorators."""

import functools
import logging
import sys

import click
from rich.console import Console
from rich.markup import escape

from mvcolor.exceptions import MvColorError

console_err = Console(stderr=True)


def setup_logging(level: str = "warning") -> None:
    """Setup logging configuration."""
    log_level = getattr(logging, level.upper(), logging.WARNING)
    logging.basicConfig(
        level=log_level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
        force=True,
    )


def verbose_option(f):
    """Add -v/-vv verbose option to a command/group with automatic logging setup.

    Usage:
        @click.command()
        @verbose_option
        @click.pass_context
        def my_cmd(ctx, verbose):
            pass
    """

    def callback(ctx, param, value):
        root = ctx.find_root()
        if root.obj is None:
            root.obj = {}
        if value:
            setup_logging(level="info" if value == 1 else "debug")
            root.obj["verbose"] = max(value, root.obj.get("verbose", 0))
        return value

    return click.option(
        "-v",
        "--verbose",
        count=True,
        default=0,
        help="Verbose output (-v for info, -vv for debug)",
        callback=callback,
        expose_value=True,
    )(f)


def report_error(e: MvColorError) -> None:
    console_err.print(f"[red]Error:[/red] {escape(e.message)}", highlight=False)
    if e.details:
        console_err.print(f"  Details: {escape(e.details)}", highlight=False)
    if e.suggestion:
        console_err.print(f"  [dim]Suggestion: {escape(e.suggestion)}[/dim]", highlight=False)


def handle_errors(f):
    """Print library errors and exit with the code their class carries."""

    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except MvColorError as e:
            report_error(e)
            sys.exit(e.exit_code)

    return wrapper
