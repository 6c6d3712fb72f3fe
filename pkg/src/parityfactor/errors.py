"""Exception hierarchy shared by every module."""


class ParityFactorError(Exception):
    """Base class for all errors raised by this package."""


class InputError(ParityFactorError, ValueError):
    """Malformed or inconsistent input (bad vertex ids, overlapping sets, ...)."""


class ParseError(InputError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DomainError(ParityFactorError, ValueError):
    """Parameters outside the mathematical domain of an operation."""


class UnsupportedInputError(InputError):
    """Input is well formed but outside what the operation handles (e.g. loops)."""


class InfeasibleError(ParityFactorError):
    """No object of the requested kind can exist for these inputs."""


class PreconditionError(ParityFactorError):
    """A hypothesis of the theorem checker does not hold."""


class LimitError(ParityFactorError):
    """Exhaustive search refused because the instance exceeds the size limit."""


class ConvergenceError(ParityFactorError):
    """An iterative numerical routine failed to converge."""


__all__ = [
    "ParityFactorError",
    "InputError",
    "ParseError",
    "DomainError",
    "UnsupportedInputError",
    "InfeasibleError",
    "PreconditionError",
    "LimitError",
    "ConvergenceError",
]
