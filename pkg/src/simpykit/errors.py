"""Exception types raised across the toolkit."""

from __future__ import annotations

from .nodes import Span


class SimpykitError(Exception):
    """Common base so callers can catch everything from this package."""


class LexError(SimpykitError):
    def __init__(self, message: str, span: Span | None = None):
        super().__init__(message)
        self.message = message
        self.span = span

    def __str__(self) -> str:
        if self.span is not None:
            return f"{self.message} (at byte {self.span.start})"
        return self.message


class ParseError(SimpykitError):
    def __init__(self, message: str, span: Span | None = None, expected: frozenset | None = None):
        super().__init__(message)
        self.message = message
        self.span = span
        self.expected = expected or frozenset()

    def __str__(self) -> str:
        s = self.message
        if self.expected:
            s += " (expected " + ", ".join(sorted(self.expected)) + ")"
        if self.span is not None:
            s += f" at byte {self.span.start}"
        return s


class EmitError(SimpykitError):
    pass


class TableError(SimpykitError):
    pass


class VocabError(SimpykitError):
    pass
