"""Exception hierarchy shared by every engine in the package."""


class NivenError(Exception):
    """Base class for all package errors."""


class DomainError(NivenError, ValueError):
    """An argument lies outside the domain where an operation is defined."""


class DegenerateApproximantError(DomainError):
    """F(r) vanished, so F(0)/F(r) is not a rational approximant."""


class IndeterminateError(NivenError):
    """An enclosure is too wide to decide the requested question."""


class ResourceLimitError(NivenError):
    """A scan or work cap was exceeded before an answer was found."""


class InvariantError(NivenError, AssertionError):
    """A mathematically guaranteed property failed.

    This always signals a defect in the package, never bad input.
    """
