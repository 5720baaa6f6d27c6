"""Exception hierarchy.

Every error raised by the library derives from :class:`AngleSpreadError`,
which itself is a ``ValueError`` so callers that only care about bad input
can catch the builtin.
"""


class AngleSpreadError(ValueError):
    """Base class for domain errors."""


class EmptyInput(AngleSpreadError):
    pass


class NegativeCoordinate(AngleSpreadError):
    pass


class BadSum(AngleSpreadError):
    pass


class ZeroVector(AngleSpreadError):
    pass


class DimensionMismatch(AngleSpreadError):
    pass


class UniformInput(AngleSpreadError):
    """The point is (numerically) the uniform distribution; no chord exists."""


class BadDimension(AngleSpreadError):
    pass


class DegenerateDenominator(AngleSpreadError):
    pass


class InfeasiblePair(AngleSpreadError):
    pass


class OutOfDomain(AngleSpreadError):
    pass


class ToleranceNotMet(AngleSpreadError):
    """Bisection could not reach the requested accuracy."""


class TooLarge(AngleSpreadError):
    """Resource guard: the requested enumeration is too big."""
