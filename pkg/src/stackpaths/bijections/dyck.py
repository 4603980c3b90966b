"""Uniquely sorted vee, svee and layered permutations to Dyck paths.

vee:      reading values 2k+1 down to 2, a value right of the 1 gives U and a
          value left of it gives D.
svee, layered: each descent bottom gives U and each ascent top gives D,
          read left to right over positions 2..2k+1.
"""

from __future__ import annotations

from typing import Sequence

from ..errors import PreconditionError
from ..paths import Family, LatticePath
from ..perm import Perm
from ._common import require_member, require_path, updown
from .shapes import ShapeClass, layered_from_word, svee_from_word

DYCK_SHAPES = (ShapeClass.VEE, ShapeClass.SVEE, ShapeClass.LAYERED)


def _shape(shape) -> ShapeClass:
    shape = ShapeClass.parse(shape)
    if shape not in DYCK_SHAPES:
        raise PreconditionError(f"no Dyck path map for shape {shape.value}")
    return shape


def to_dyck(p: Sequence[int], shape: "ShapeClass | str") -> LatticePath:
    shape = _shape(shape)
    p = require_member(p, shape)
    if shape is ShapeClass.VEE:
        n = len(p)
        one = p.index(1)
        right = set(p[one + 1:])
        steps = "".join("U" if v in right else "D" for v in range(n, 1, -1))
    else:
        steps = updown(p).replace("A", "D").replace("B", "U")
    return LatticePath(steps, Family.DYCK)


def from_dyck(path: "LatticePath | str", shape: "ShapeClass | str") -> Perm:
    shape = _shape(shape)
    steps = require_path(path, Family.DYCK)
    if shape is ShapeClass.VEE:
        n = len(steps) + 1
        left = [n + 1 - i for i, c in enumerate(steps, start=1) if c == "D"]
        right = [n + 1 - i for i, c in enumerate(steps, start=1) if c == "U"]
        return tuple(sorted(left, reverse=True)) + (1,) + tuple(sorted(right))
    word = steps.replace("D", "A").replace("U", "B")
    if shape is ShapeClass.SVEE:
        return svee_from_word(word)
    return layered_from_word(word)
