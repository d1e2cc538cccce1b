"""Node budgets for exhaustive searches."""

import logging
import os
from typing import Optional

from mvcolor.exceptions import BudgetExhaustedError, ConfigError

logger = logging.getLogger(__name__)

DEFAULT_NODE_BUDGET = 10**8
BUDGET_ENV = "MV_NODE_BUDGET"


def default_node_budget() -> int:
    value = os.getenv(BUDGET_ENV)
    if not value:
        return DEFAULT_NODE_BUDGET
    try:
        budget = int(value)
    except ValueError:
        raise ConfigError(f"{BUDGET_ENV} must be an integer, got {value!r}") from None
    if budget <= 0:
        raise ConfigError(f"{BUDGET_ENV} must be positive, got {budget}")
    return budget


class NodeBudget:
    """Counts search nodes and aborts once ``limit`` is exceeded.

    One budget may be shared by several searches (e.g. the iterative-k loop of a
    chromatic solver), so the count is cumulative.
    """

    def __init__(self, limit: Optional[int] = None, label: str = "search"):
        self.limit = limit if limit is not None else default_node_budget()
        self.label = label
        self.nodes = 0
        self.best: Optional[int] = None
        self.lower: Optional[int] = None
        self.upper: Optional[int] = None

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.limit:
            logger.warning("%s exhausted its budget of %d nodes", self.label, self.limit)
            raise BudgetExhaustedError(
                f"{self.label} exhausted its node budget ({self.limit})",
                nodes=self.nodes,
                best=self.best,
                lower=self.lower,
                upper=self.upper,
            )

    def bounds(self, lower: Optional[int] = None, upper: Optional[int] = None) -> None:
        if lower is not None:
            self.lower = lower
        if upper is not None:
            self.upper = upper


def as_budget(budget, label: str) -> NodeBudget:
    """Accept a NodeBudget, an int limit or None."""
    if isinstance(budget, NodeBudget):
        return budget
    return NodeBudget(budget, label=label)
