r"""
Exception types shared across the package.

Every computational failure mode has a named exception so that callers
(and the command line driver) can distinguish bad input from an internal
cross-check that did not come out equal.
"""


class CurvelatError(Exception):
    r"""Base class for all package errors."""


class PolySyntaxError(CurvelatError):
    r"""
    Raised when a polynomial string does not match the input grammar.

    Attributes
    ----------
    position : int
        0-based offset into the original string where parsing failed.
    """

    def __init__(self, message, position):
        super().__init__("%s (at offset %d)" % (message, position))
        self.position = position


class InvalidParametrization(CurvelatError):
    r"""Raised when branch data violates a constructor constraint."""


class PrimitivityError(InvalidParametrization):
    r"""Raised when all exponents of a branch share a common factor."""


class InsufficientTruncation(CurvelatError):
    r"""Raised when a computation needs more series terms than kept."""


class NonStabilizing(CurvelatError):
    r"""Raised when a scan fails to reach a stable value within bounds."""


class ConsistencyError(CurvelatError):
    r"""Raised when two independent routes to the same value disagree."""


class PolynomialityViolation(CurvelatError):
    r"""Raised when a series expected to be a polynomial has a tail."""


class SupportViolation(CurvelatError):
    r"""Raised when series support escapes its proven bounding box."""


class BoxTooSmall(CurvelatError):
    r"""Raised when a sublevel computation touches the bounding box."""


class UnclassifiablePattern(CurvelatError):
    r"""Raised when local step data matches no classified case."""


class CurveSchemaError(CurvelatError):
    r"""Raised when a curve file is readable JSON but not a valid curve."""
