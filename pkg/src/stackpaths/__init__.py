"""Stack-sorting, uniquely sorted permutations and their lattice-path bijections."""

__version__ = "0.1.0"

from .chc import Hook, build_chc, check_partition, is_nice, is_uniquely_sorted  # noqa: E402
from .errors import (InvalidInput, InvariantError, PreconditionError,  # noqa: E402
                     ResourceLimit, StackPathsError)
from .perm import (contains_pattern, avoids, descents, direct_sum, inverse,  # noqa: E402
                   normalize, parse_perm, skew_sum, tail_length)

__all__ = [
    "Hook", "build_chc", "check_partition", "is_nice", "is_uniquely_sorted",
    "InvalidInput", "InvariantError", "PreconditionError", "ResourceLimit", "StackPathsError",
    "contains_pattern", "avoids", "descents", "direct_sum", "inverse", "normalize",
    "parse_perm", "skew_sum", "tail_length",
]
