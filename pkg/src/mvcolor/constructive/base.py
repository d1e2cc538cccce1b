"""Shared validation for closed-form colorings."""

import logging
from typing import Dict, Optional

from mvcolor.core.graph import Graph
from mvcolor.exceptions import ConstructionError
from mvcolor.models.coloring import Coloring, ConstructedColoring
from mvcolor.solvers.chromatic import validate_coloring

logger = logging.getLogger(__name__)


def finish(
    g: Graph,
    coloring: Coloring,
    source: str,
    mode: str,
    claimed_k: int,
    notes: Optional[Dict[str, int]] = None,
    anomaly: Optional[str] = None,
) -> ConstructedColoring:
    """Validate ``coloring`` in ``mode`` and against ``claimed_k`` before handing it out."""
    report = validate_coloring(g, coloring, mode)
    if not report.valid:
        assert report.violation is not None
        raise ConstructionError(
            f"{source} produced an invalid {mode} coloring of {g!r}",
            details=f"class {report.violation.color}: {report.violation.reason}",
        )
    if coloring.k > claimed_k:
        raise ConstructionError(
            f"{source} used {coloring.k} classes, more than the claimed {claimed_k}"
        )
    if anomaly:
        logger.warning("%s: %s", source, anomaly)
    return ConstructedColoring(
        coloring=coloring,
        source=source,
        mode=mode,
        claimed_k=claimed_k,
        notes=notes or {},
        anomaly=anomaly,
    )
