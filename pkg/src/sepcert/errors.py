"""Exception hierarchy shared by the library and the CLI."""

from __future__ import annotations


class SepcertError(Exception):
    """Base class for every error raised by sepcert."""


class InvalidInputError(SepcertError, ValueError):
    """Input violates a precondition (too few sets, overlapping interiors, ...)."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class PairUncoveredError(SepcertError):
    """Two cover polygons have no separating side line among the support lines."""

    def __init__(self, i, j):
        super().__init__(f"no support line separates polygons {i} and {j}")
        self.pair = (i, j)


class NoSeparatorError(SepcertError):
    """No candidate line separates two sets; only possible on corrupted input."""


class GenerationFailedError(SepcertError):
    pass


class ParseError(SepcertError, ValueError):
    def __init__(self, message, line=None, column=None):
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)
        self.line = line
        self.column = column


class ValidationError(SepcertError, ValueError):
    def __init__(self, report):
        super().__init__(str(report))
        self.report = report


class HashMismatchError(SepcertError):
    pass
