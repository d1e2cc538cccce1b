"""Models module for mvcolor."""

from mvcolor.models.cnf import Cnf3
from mvcolor.models.coloring import (
    MODES,
    Coloring,
    ColoringViolation,
    ConstructedColoring,
    ValidationReport,
)
from mvcolor.models.hardness import CoronaReport, GadgetCheck, SatReductionReport
from mvcolor.models.ramsey import EdgePartition, SandwichReport
from mvcolor.models.results import (
    Bound,
    BoundReport,
    CheckResult,
    InvariantResult,
    ResultRecord,
    SuiteReport,
    VisibilityWitness,
)

__all__ = [
    "MODES",
    "Bound",
    "BoundReport",
    "CheckResult",
    "Cnf3",
    "Coloring",
    "ColoringViolation",
    "ConstructedColoring",
    "CoronaReport",
    "EdgePartition",
    "GadgetCheck",
    "InvariantResult",
    "ResultRecord",
    "SandwichReport",
    "SatReductionReport",
    "SuiteReport",
    "ValidationReport",
    "VisibilityWitness",
]
