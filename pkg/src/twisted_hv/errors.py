"""Exception hierarchy shared by the library and the command line."""


class TwistedHVError(Exception):
    """Base class for all errors raised by this package."""


class IndexRangeError(TwistedHVError, OverflowError):
    """A generator index left the supported range."""


class UsageError(TwistedHVError, ValueError):
    """An operation was called with arguments it cannot honour."""


class StepBudgetExceeded(TwistedHVError):
    """A rewriting computation ran past its step budget."""

    def __init__(self, budget: int):
        super().__init__(f"rewriting exceeded the step budget of {budget}")
        self.budget = budget


class TruncationError(TwistedHVError):
    """A module action left the finite part of a truncated module."""


class ParseError(TwistedHVError, ValueError):
    """Malformed expression text.

    ``offset`` is 0-based; ``line`` and ``column`` are 1-based.
    """

    def __init__(self, message: str, text: str, offset: int, expected=()):
        self.text = text
        self.offset = offset
        self.expected = tuple(expected)
        self.line = text.count("\n", 0, offset) + 1
        self.column = offset - (text.rfind("\n", 0, offset) + 1) + 1
        detail = message
        if self.expected:
            detail += ", expected " + " or ".join(self.expected)
        super().__init__(
            f"{detail} at line {self.line}, column {self.column} (offset {offset})"
        )
        self.message = message


class ResourceLimitError(TwistedHVError):
    """A construction would exceed its configured size budget."""
