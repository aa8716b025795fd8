"""Exception types shared across the package."""


class HadamardError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(HadamardError, ValueError):
    """An argument violates a documented precondition."""


class ContractError(HadamardError, ValueError):
    """An input matrix lacks a property the operation requires (e.g. not Hadamard)."""


class CapacityError(HadamardError, ValueError):
    """Requested object exceeds the supported size cap."""


class VerificationError(HadamardError, RuntimeError):
    """A constructed matrix failed its own algebraic self-check.

    Seeing this means a construction bug, never bad user input.
    """
