"""Exception hierarchy shared by every module."""


class MvdError(Exception):
    """Base class for all errors raised by mvdcolor."""


class InputError(MvdError, ValueError):
    """Malformed or out-of-contract argument."""


class FormatError(InputError):
    """A text file or string does not follow its format."""


class IntegrityError(MvdError):
    """Stored data contradicts a recomputed fact (e.g. a coloring is not MVD)."""

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class CapacityError(MvdError):
    """Exhaustive work requested beyond the configured size limit."""

    def __init__(self, message, n=None, cap=None):
        super().__init__(message)
        self.n = n
        self.cap = cap


class DomainError(MvdError, ValueError):
    """Quantity is undefined for this input (e.g. kappa_plus of a complete graph)."""
