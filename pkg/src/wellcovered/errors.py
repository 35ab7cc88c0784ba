"""Exception types shared across the package."""


class WellCoveredError(Exception):
    """Base class for all package errors."""


class InvalidArgument(WellCoveredError, ValueError):
    """An argument is malformed or out of range."""


class PreconditionViolation(WellCoveredError):
    """The input graph lies outside the class an algorithm is proven for.

    ``cycle_length`` names the forbidden cycle that was found, when known.
    """

    def __init__(self, message, cycle_length=None):
        super().__init__(message)
        self.cycle_length = cycle_length


class ResourceLimit(WellCoveredError):
    """An exponential enumeration exceeded its cap; the result is unknown."""
