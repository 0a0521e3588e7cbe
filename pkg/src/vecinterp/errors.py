"""Exception hierarchy shared by every module."""


class InterpolationError(Exception):
    """Base class for all errors raised by :mod:`vecinterp`."""


class ValidationError(InterpolationError, ValueError):
    """Malformed input: bad JSON, zero alpha vector, invalid sigma, ..."""


class PreconditionError(InterpolationError, ValueError):
    """An operation was called outside its documented domain."""


class NotInModuleError(InterpolationError, ValueError):
    """The polynomial is not a combination of the supplied generators."""


class InvariantError(InterpolationError, RuntimeError):
    """A theoretical guarantee failed; this signals a bug, not bad input."""
