"""Exception types shared across the package."""


class HorizonentError(Exception):
    """Base class for all errors raised by this package."""


class InvalidArgumentError(HorizonentError, ValueError):
    """An argument violates a documented precondition."""


class InvalidStateError(HorizonentError, ValueError):
    """A matrix fails a physicality or structural requirement."""


class DegenerateInputError(HorizonentError, ValueError):
    """Input sits on a boundary where the requested quantity is ill-defined."""
