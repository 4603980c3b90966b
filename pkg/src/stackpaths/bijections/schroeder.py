"""Uniquely sorted vee-step permutations to little Schroeder paths.

Reading by value upward from the entry 1: a point left of the vertical
gives U, a single point right of it gives D and a pair 21 right of it
gives one H.
"""

from __future__ import annotations

from typing import Sequence

from ..paths import Family, LatticePath
from ..perm import Perm
from ._common import require_member, require_path
from .shapes import ShapeClass, vee_from_items, vee_layered_items

_LABEL = {("left", 1): "U", ("layer", 1): "D", ("layer", 2): "H"}
_ITEM = {v: k for k, v in _LABEL.items()}


def to_schroeder(p: Sequence[int]) -> LatticePath:
    p = require_member(p, ShapeClass.VEE_STEP)
    steps = "".join(_LABEL[item] for item in vee_layered_items(p))
    return LatticePath(steps, Family.LITTLE_SCHROEDER)


def from_schroeder(path: "LatticePath | str") -> Perm:
    steps = require_path(path, Family.LITTLE_SCHROEDER)
    return vee_from_items([_ITEM[c] for c in steps])
