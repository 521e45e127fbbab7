"""Run outcome enumeration for the rivercross CLI.

This module defines the RunStatus enum, which names the outcome of a
command and fixes the process exit code it maps to.
"""

from enum import Enum


class RunStatus(Enum):
    """Enumeration of all possible command outcomes.

    Status Categories:
        - Success: SOLVED, VERIFIED
        - Negative results: INFEASIBLE, REFUTED
        - Errors: INVALID_INPUT, BUDGET_EXCEEDED, FAILED
    """

    SOLVED = "SOLVED"
    """Instance solved, or command completed with output."""

    VERIFIED = "VERIFIED"
    """Every checked law or property held up to the bound."""

    INFEASIBLE = "INFEASIBLE"
    """Final state unreachable from the initial state."""

    REFUTED = "REFUTED"
    """A checked law or property failed; counterexamples reported."""

    INVALID_INPUT = "INVALID_INPUT"
    """Configuration, state text or input file rejected."""

    BUDGET_EXCEEDED = "BUDGET_EXCEEDED"
    """A configured enumeration budget would be exceeded."""

    FAILED = "FAILED"
    """Command threw an unexpected exception."""

    @property
    def is_success(self) -> bool:
        """Return True if status indicates the command succeeded."""
        return self in {self.SOLVED, self.VERIFIED}

    @property
    def is_error(self) -> bool:
        """Return True if status indicates an error condition."""
        return self in {
            self.INVALID_INPUT,
            self.BUDGET_EXCEEDED,
            self.FAILED,
        }

    @property
    def exit_code(self) -> int:
        """Process exit code: 0 success, 2 negative result, 1 error."""
        if self.is_success:
            return 0
        if self.is_error:
            return 1
        return 2
