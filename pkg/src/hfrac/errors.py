"""Exception types shared across the package."""

from __future__ import annotations


class GraphParseError(ValueError):
    """A graph expression or graph file could not be parsed."""


class GuardExceeded(ValueError):
    """A size guard was hit (vertex count, enumeration cap, matrix size)."""


class DimensionMismatch(ValueError):
    """Operands have incompatible dimensions."""


class PreconditionError(ValueError):
    """An operation was called outside its documented domain."""


class VerificationError(ValueError):
    """A certificate or cover failed verification where validity is required."""


class UnsupportedFamily(ValueError):
    """The closed-form theta evaluator does not cover this graph family."""


class BudgetExhausted(Exception):
    """Raw budget signal; callers translate it into a certified interval."""


class SearchCutoff(Exception):
    """A search stopped early.  Carries the certified interval found so far.

    ``lower`` and ``upper`` bracket the true value; ``witness`` attains the
    reported lower bound (for maximization-style parameters).
    """

    def __init__(self, parameter: str, lower, upper, witness=None):
        super().__init__(f"{parameter}: budget exhausted, certified interval [{lower}, {upper}]")
        self.parameter = parameter
        self.lower = lower
        self.upper = upper
        self.witness = witness
