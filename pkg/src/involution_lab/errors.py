"""Exception hierarchy shared by all modules."""


class InvolutionLabError(Exception):
    """Base class for library-specific failures."""


class ExactnessError(InvolutionLabError):
    """A computation that must be exact produced a remainder.

    Raised when a division guaranteed exact by a counting identity is not,
    or when a quantity obtained through dyadic intermediates fails its
    final integrality assertion.  Seeing this means an internal invariant
    is broken, not that the caller passed a bad argument.
    """


class ResourceLimitError(InvolutionLabError):
    """Predicted enumeration size exceeds the configured cap."""


class InconclusiveError(InvolutionLabError):
    """A period scan ran out of window before the answer was certain."""


class VerificationError(InvolutionLabError):
    """A computed result contradicts the closed form it must satisfy."""
