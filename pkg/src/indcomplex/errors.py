"""Exception hierarchy shared by every module."""


class IndComplexError(Exception):
    """Base class for all errors raised by :mod:`indcomplex`."""


class InputError(IndComplexError, ValueError):
    """Malformed or out-of-contract input (bad vertex id, loop, non-face...)."""


class ResourceLimitError(IndComplexError, RuntimeError):
    """An instance exceeds a configured size limit of an exact search."""
