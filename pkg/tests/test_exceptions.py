"""Tests for custom exceptions."""

import pytest

from mvcolor.exceptions import (
    BudgetExhaustedError,
    ConfigError,
    ConstructionError,
    DisconnectedGraphError,
    InputError,
    MvColorError,
    NoClosedFormError,
    ParseError,
    PreconditionError,
    ScaleLimitError,
    ValidationError,
)


class TestMvColorError:
    """Tests for MvColorError base exception."""

    def test_message_only(self) -> None:
        """Test exception with message only."""
        error = MvColorError("Something went wrong")
        assert error.message == "Something went wrong"
        assert error.details is None
        assert error.suggestion is None
        assert str(error) == "Something went wrong"

    def test_with_details(self) -> None:
        """Test exception with message and details."""
        error = MvColorError("Error occurred", details="More info here")
        assert error.details == "More info here"
        assert "Details: More info here" in str(error)

    def test_with_suggestion(self) -> None:
        """Test exception with message and suggestion."""
        error = MvColorError("Error occurred", suggestion="Try again")
        assert error.suggestion == "Try again"
        assert "Suggestion: Try again" in str(error)

    def test_with_all_fields(self) -> None:
        """Test exception with all fields."""
        error = MvColorError("Error occurred", details="More info", suggestion="Try again")
        error_str = str(error)
        assert "Error occurred" in error_str
        assert "Details: More info" in error_str
        assert "Suggestion: Try again" in error_str

    def test_is_exception(self) -> None:
        """Test that MvColorError is an Exception."""
        assert isinstance(MvColorError("Test error"), Exception)


class TestExitCodes:
    """Each class carries the exit code the CLI uses for it."""

    @pytest.mark.parametrize(
        "error_class, code",
        [
            (MvColorError, 1),
            (ConfigError, 1),
            (ConstructionError, 1),
            (ValidationError, 2),
            (BudgetExhaustedError, 3),
            (InputError, 4),
            (ParseError, 4),
            (PreconditionError, 4),
            (DisconnectedGraphError, 4),
            (ScaleLimitError, 4),
            (NoClosedFormError, 4),
        ],
    )
    def test_exit_code(self, error_class: type, code: int) -> None:
        """Test the exit code of each exception class."""
        assert error_class("boom").exit_code == code

    def test_input_hierarchy(self) -> None:
        """Test that precondition failures are input errors."""
        error = DisconnectedGraphError("two components")
        assert isinstance(error, PreconditionError)
        assert isinstance(error, InputError)
        assert isinstance(error, MvColorError)


class TestParseError:
    """Tests for ParseError."""

    def test_position_fills_details(self) -> None:
        """Test that the position becomes the details when none are given."""
        error = ParseError("Unexpected token", position=7)
        assert error.position == 7
        assert error.details == "at position 7"

    def test_explicit_details_win(self) -> None:
        """Test that explicit details are kept."""
        error = ParseError("Bad", position=3, details="line 2")
        assert error.details == "line 2"


class TestBudgetExhaustedError:
    """Tests for BudgetExhaustedError."""

    def test_carries_search_state(self) -> None:
        """Test that nodes, best and bounds are kept and summarized."""
        error = BudgetExhaustedError("out of nodes", nodes=10, best=4, lower=3, upper=5)
        assert (error.nodes, error.best, error.lower, error.upper) == (10, 4, 3, 5)
        assert "best=4" in error.details
        assert "--node-budget" in error.suggestion
