"""Exception types shared by the library and mapped to CLI exit codes."""


class StackPathsError(Exception):
    exit_code = 1


class InvalidInput(StackPathsError, ValueError):
    """Malformed permutation, path, pattern or argument."""
    exit_code = 2


class PreconditionError(StackPathsError, ValueError):
    """Input is well formed but outside the domain of the operation."""
    exit_code = 2


class ResourceLimit(StackPathsError, RuntimeError):
    """A brute-force size limit would be exceeded."""
    exit_code = 3

    def __init__(self, what: str, size: int, limit: int):
        self.what = what
        self.size = size
        self.limit = limit
        super().__init__(f"{what}: size {size} exceeds the configured limit {limit}")


class InvariantError(StackPathsError, ArithmeticError):
    """An internal identity failed (e.g. an inexact division in a closed form)."""
    exit_code = 1
