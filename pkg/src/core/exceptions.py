"""
Error hierarchy shared by the library and the CLI.

Each class carries the process exit code the CLI reports for it.
"""


class WienerError(Exception):
    """Base class for all errors raised by this package."""

    exit_code: int = 1


class InvalidInputError(WienerError, ValueError):
    """A precondition on the inputs of an operation is violated."""

    exit_code = 1


class NumericalDegeneracyError(WienerError):
    """A numerical degeneracy that cannot be regularized away."""

    exit_code = 2


class StorageError(WienerError):
    """Reading or writing an input or output file failed."""

    exit_code = 3
