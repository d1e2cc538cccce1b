"""Utilities module for mvcolor."""

from mvcolor.utils.decorators import handle_errors, verbose_option
from mvcolor.utils.output import format_output, print_record

__all__ = ["format_output", "handle_errors", "print_record", "verbose_option"]
