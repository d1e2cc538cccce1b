"""Commands module for mvcolor."""

from mvcolor.commands.check import check, check_set
from mvcolor.commands.color import color
from mvcolor.commands.config import config_cmd
from mvcolor.commands.gadget import gadget
from mvcolor.commands.graph import build, export, stats
from mvcolor.commands.ramsey import rho
from mvcolor.commands.solve import solve
from mvcolor.commands.verify import schema, verify

__all__ = [
    "build",
    "check",
    "check_set",
    "color",
    "config_cmd",
    "export",
    "gadget",
    "rho",
    "schema",
    "solve",
    "stats",
    "verify",
]
