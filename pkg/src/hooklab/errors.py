"""Exception hierarchy shared by every hooklab module."""

from __future__ import annotations


class HookError(Exception):
    """Base class for all hooklab errors."""


class ParseError(HookError):
    """Raised for malformed expression text; ``pos`` is a 0-based offset."""

    def __init__(self, message: str, pos: int | None = None, source: str | None = None):
        self.pos = pos
        self.source = source
        if pos is not None:
            message = f"{message} at position {pos}"
        super().__init__(message)


class DomainError(HookError):
    """An operation was applied outside its domain (e.g. log of a series with f(0) != 1)."""


class PoleError(DomainError):
    """A substitution made a denominator vanish."""

    def __init__(self, parameters, message: str | None = None):
        self.parameters = tuple(parameters)
        names = ", ".join(self.parameters)
        super().__init__(message or f"denominator vanishes when substituting {names}")


class SingularError(HookError):
    """The hook length expansion has no solution at step ``n``.

    ``partial`` holds the weight table computed for indices 1..n-1.
    """

    def __init__(self, n: int, partial):
        self.n = n
        self.partial = partial
        super().__init__(f"Denominator is zero, no solution for n={n}.")
