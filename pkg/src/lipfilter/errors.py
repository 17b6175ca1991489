"""Exception types shared across the package."""


class Error(Exception):
    """Base class for all lipfilter errors."""


class OutOfDomain(Error):
    """A vertex is not part of the graph under consideration."""


class BudgetExceeded(Error):
    """An exploration budget (BFS vertices or matching edges) ran out.

    Deterministic stand-in for the randomized failure probability of the
    local algorithms: a query either completes exactly or raises this.
    """


class PartialFunction(Error):
    """An operation that needs a total function hit an undefined value."""


class RangeViolation(Error):
    """A function value fell outside the claimed range [lo, lo + r]."""


class InvalidInterval(Error):
    """Interval bounds are not ordered (lo > hi)."""


class ParseError(Error):
    """Expression text could not be parsed.

    Attributes:
        position: character offset of the offending token.
    """

    def __init__(self, message, position=None):
        super().__init__(message if position is None else f"{message} (at {position})")
        self.position = position


class DimensionError(Error):
    """An expression references a coordinate beyond the domain dimension."""


class InvalidParam(Error):
    """A numeric parameter is outside its documented range."""


class NotACover(Error):
    """The supplied vertex set leaves some violated pair uncovered."""


class CapExceeded(Error):
    """The exact cover optimum exceeds the caller's cap."""


class SizeExceeded(Error):
    """The instance is larger than an exact oracle is willing to handle."""


class RetryExhausted(Error):
    """Rejection sampling failed to produce an admissible draw in time."""
