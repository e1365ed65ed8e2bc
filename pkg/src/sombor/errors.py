"""Exception hierarchy.

Every error raised by the library derives from ``SomborError`` and from
``ValueError``, so callers that only care about bad input can catch the latter.
Parsers attach the 1-based input line to ``line`` when they know it.
"""

from __future__ import annotations


class SomborError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(message)
        self.message = message
        self.line = line

    def __str__(self) -> str:
        if self.line is None:
            return self.message
        return f"line {self.line}: {self.message}"


class GraphError(SomborError):
    pass


class EmptyDomainError(GraphError):
    """A graph with zero vertices was requested."""


class VertexRangeError(GraphError):
    """An edge endpoint lies outside 0..n-1."""


class InvalidEdgeError(GraphError):
    """Self-loop or otherwise malformed vertex pair."""


class InvalidParameterError(SomborError):
    """A family or formula parameter is below its minimum."""


class EnumerationCapError(SomborError):
    """Enumeration requested outside the supported 1..7 vertex range."""


class NoClosedFormError(SomborError):
    """No published closed form exists for the requested family."""


class IndexDomainError(SomborError):
    """0**p with p <= 0 in the general first Zagreb index."""


class ParseError(SomborError):
    pass


class Graph6Error(ParseError):
    pass


class MalformedGraph6Error(Graph6Error):
    pass


class Graph6LengthError(Graph6Error):
    pass


class Graph6PaddingError(Graph6Error):
    pass


class UnsupportedSizeError(Graph6Error):
    pass


class EdgeListFormatError(ParseError):
    pass
