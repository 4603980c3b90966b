from __future__ import annotations

from typing import Sequence

from ..chc import is_uniquely_sorted
from ..errors import PreconditionError
from ..paths import Family, LatticePath, parse_steps, validate
from ..perm import Perm, as_perm
from .shapes import ShapeClass, has_shape


def require_member(p: Sequence[int], shape: ShapeClass) -> Perm:
    p = as_perm(p)
    if not is_uniquely_sorted(p):
        raise PreconditionError(f"{p} is not uniquely sorted")
    if not has_shape(p, shape):
        raise PreconditionError(f"{p} is not {shape.value}")
    return p


def require_path(path: "LatticePath | str", family: Family) -> str:
    steps = path.steps if isinstance(path, LatticePath) else parse_steps(path)
    if not validate(steps, family):
        raise PreconditionError(f"{steps!r} is not a valid {family.value} path")
    return steps


def updown(p: Perm) -> str:
    """'A' for each ascent top and 'B' for each descent bottom, positions 2..n."""
    return "".join("A" if b > a else "B" for a, b in zip(p, p[1:]))

