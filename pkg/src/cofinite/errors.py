"""Exception types raised by the library."""


class CofiniteError(Exception):
    """Base class for all library errors."""


class DimensionMismatch(CofiniteError, ValueError):
    pass


class PreconditionError(CofiniteError, ValueError):
    """An operation was called on input outside its domain."""


class NotContained(PreconditionError):
    """A generator (or base point) is not a member of the ambient semigroup."""


class AlgorithmDisagreement(CofiniteError, RuntimeError):
    """Two independent routes produced different answers. Always a bug."""
