"""Exception hierarchy for the discurve package.

Every error raised on purpose by the library derives from DiscurveError so
callers (and the CLI) can distinguish expected failure modes from bugs.
"""


class DiscurveError(Exception):
    """Base class for all errors raised by discurve."""


class ParseError(DiscurveError):
    """Raised when a polynomial, series or coefficient string cannot be parsed.

    Carries the character position of the offending token when known.
    """

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = "%s (at position %d)" % (message, position)
        super().__init__(message)
        self.position = position


class InvalidInput(DiscurveError):
    """Input is well-formed but violates a mathematical precondition.

    Examples: a reducible curve where a branch is required, a parametrization
    that is not primitive, a polynomial that is not y-general.
    """


class InvalidDescriptor(DiscurveError):
    """A normal-form descriptor has parameters outside its validity range."""


class PrecisionExhausted(DiscurveError):
    """Numeric escalation hit its ceiling without separating two quantities.

    The computation could not certify whether two values coincide even at the
    maximum working precision.  Raising is preferred to guessing.
    """


class NumericAmbiguity(DiscurveError):
    """Two numeric values fell inside the ambiguity band.

    Internal signal: drivers catch it and retry the whole computation at
    higher precision; only when the precision ceiling is reached does it
    surface as PrecisionExhausted.
    """


class InsufficientTruncation(DiscurveError):
    """A series was truncated too early for the requested operation.

    Raised when recomputing with more terms changes the visible answer, i.e.
    the requested order bound does not determine the result.
    """


class InfiniteIntersection(DiscurveError):
    """Intersection multiplicity of two curves with a common component."""


class IncompleteSemigroup(DiscurveError):
    """A valuation-semigroup computation could not reach its conductor."""


class InternalError(DiscurveError):
    """Invariant breakage inside the library; always a bug, please report."""
