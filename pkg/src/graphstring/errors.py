"""Exception hierarchy shared by the codec, oracles and CLI."""

from __future__ import annotations


class GraphStringError(Exception):
    """Base class for every domain error raised by this package."""


class InvalidNodeError(GraphStringError, IndexError):
    """A node id outside ``0..node_count-1`` was passed in."""


class InstructionParseError(GraphStringError, ValueError):
    def __init__(self, text: str, index: int):
        self.text = text
        self.index = index
        super().__init__(f"invalid instruction {text[index]!r} at index {index}")


class EncodeError(GraphStringError):
    """The graph cannot be encoded (unreachable nodes, no valid start)."""

    def __init__(self, message: str, node: int | None = None):
        self.node = node
        super().__init__(message)


class BudgetExceeded(GraphStringError):
    """A bounded search ran out of budget.

    ``best`` carries the best string found so far (or ``None``); it is never
    a certified optimum.
    """

    def __init__(self, message: str, best: str | None = None, explored: int = 0):
        self.best = best
        self.explored = explored
        super().__init__(message)


class SizeLimitError(GraphStringError):
    """An exact oracle was asked to work beyond its node cap."""


class EdgeListParseError(GraphStringError, ValueError):
    def __init__(self, message: str, line: int):
        self.line = line
        super().__init__(f"line {line}: {message}")


class StatisticsError(GraphStringError, ValueError):
    """Degenerate input for a statistic (too few points, constant data)."""
