"""Custom exceptions for mvcolor."""

from typing import Optional


class MvColorError(Exception):
    """Base exception for mvcolor."""

    exit_code = 1

    def __init__(
        self, message: str, details: Optional[str] = None, suggestion: Optional[str] = None
    ):
        super().__init__(message)
        self.message = message
        self.details = details
        self.suggestion = suggestion

    def __str__(self) -> str:
        parts = [self.message]
        if self.details:
            parts.append(f"Details: {self.details}")
        if self.suggestion:
            parts.append(f"Suggestion: {self.suggestion}")
        return "\n".join(parts)


class ConfigError(MvColorError):
    """Configuration error."""

    pass


class InputError(MvColorError):
    """Malformed or unsupported input."""

    exit_code = 4


class ParseError(InputError):
    """Text input could not be parsed."""

    def __init__(
        self,
        message: str,
        position: Optional[int] = None,
        details: Optional[str] = None,
        suggestion: Optional[str] = None,
    ):
        if position is not None and details is None:
            details = f"at position {position}"
        super().__init__(message, details, suggestion)
        self.position = position


class PreconditionError(InputError):
    """An operation was called outside its domain."""

    pass


class DisconnectedGraphError(PreconditionError):
    """The operation requires a connected graph."""

    pass


class ScaleLimitError(PreconditionError):
    """The instance is beyond the desk-scale limit of an exhaustive search."""

    pass


class NoClosedFormError(PreconditionError):
    """No closed-form construction exists for the requested parameters."""

    pass


class ValidationError(MvColorError):
    """A coloring, vertex set or edge partition failed its check."""

    exit_code = 2


class BudgetExhaustedError(MvColorError):
    """A search ran out of nodes before proving optimality."""

    exit_code = 3

    def __init__(
        self,
        message: str,
        nodes: int = 0,
        best: Optional[int] = None,
        lower: Optional[int] = None,
        upper: Optional[int] = None,
        details: Optional[str] = None,
        suggestion: Optional[str] = None,
    ):
        if details is None:
            details = f"explored {nodes} nodes; best={best}, bounds=[{lower}, {upper}]"
        if suggestion is None:
            suggestion = "Raise the node budget with --node-budget or MV_NODE_BUDGET"
        super().__init__(message, details, suggestion)
        self.nodes = nodes
        self.best = best
        self.lower = lower
        self.upper = upper


class ConstructionError(MvColorError):
    """A closed-form construction failed its own validation."""

    pass
