"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class SudokuChromaError(Exception):
    """Base class for all package errors."""


class InvalidSpecError(SudokuChromaError, ValueError):
    """A family parameter or expression is out of range or malformed."""


class GraphParseError(SudokuChromaError, ValueError):
    """A graph or coloring file could not be parsed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class EmptyLineGraphError(SudokuChromaError, ValueError):
    """The line graph of an edgeless graph has no vertices."""


class ImproperColoringError(SudokuChromaError, ValueError):
    """A partial coloring is not proper, or uses colors outside its palette."""


class NotExtendableError(SudokuChromaError, ValueError):
    """The operation requires an extendable partial coloring."""


class SearchBudgetError(SudokuChromaError, RuntimeError):
    """An exact search was refused or aborted because it exceeds its budget."""


class UnsupportedGraphError(SudokuChromaError, ValueError):
    """The graph lies outside the class an operation supports (e.g. disconnected)."""


class HypothesisNotMetError(SudokuChromaError, ValueError):
    """The premises of a bound do not hold for the given graphs."""
