"""Shape classes, permutation-to-path bijections and class decompositions.

``MAPS`` names every bijection by the result it proves and records the
pattern class it starts from and the path family it lands in.
"""

from __future__ import annotations

from functools import partial
from typing import Callable, NamedTuple

from ..errors import InvalidInput
from ..paths import Family, LatticePath
from ..perm import Perm
from .decompositions import (modsvee_join, modsvee_split, modvee_modsvee, nice_decompose,
                             nice_recompose)
from .dyck import from_dyck, to_dyck
from .motzkin import from_smotzkin, to_smotzkin
from .schroeder import from_schroeder, to_schroeder
from .shapes import (BlockDecomposition, ShapeClass, classify, has_shape, stair_blocks)


class PathMap(NamedTuple):
    name: str
    patterns: tuple[Perm, ...]
    shape: ShapeClass
    family: Family
    forward: Callable[[Perm], LatticePath]
    backward: Callable[[LatticePath | str], Perm]


def _dyck(name, pats, shape):
    return PathMap(name, pats, shape, Family.DYCK,
                   partial(to_dyck, shape=shape), partial(from_dyck, shape=shape))


def _smotzkin(name, pats, shape):
    return PathMap(name, pats, shape, Family.SMOTZKIN,
                   partial(to_smotzkin, shape=shape), partial(from_smotzkin, shape=shape))


MAPS: dict[str, PathMap] = {
    m.name: m for m in (
        _dyck("lemma3.1", ((1, 3, 2), (2, 3, 1)), ShapeClass.VEE),
        _dyck("lemma3.2", ((1, 3, 2), (3, 1, 2)), ShapeClass.SVEE),
        _dyck("lemma3.3", ((2, 3, 1), (3, 1, 2)), ShapeClass.LAYERED),
        _smotzkin("thm5.3", ((3, 1, 2), (2, 4, 3, 1)), ShapeClass.STAIR_SVEE),
        _smotzkin("thm5.4", ((3, 1, 2), (3, 4, 2, 1)), ShapeClass.STAIR_LAYERED),
        _smotzkin("thm5.5", ((3, 1, 2), (1, 4, 3, 2)), ShapeClass.SVEE_INCREASING),
        _smotzkin("thm5.6", ((2, 3, 1), (1, 4, 2, 3)), ShapeClass.VEE_LAYERED),
        PathMap("thm6.1", ((2, 3, 1), (1, 4, 3, 2)), ShapeClass.VEE_STEP,
                Family.LITTLE_SCHROEDER, to_schroeder, from_schroeder),
    )
}

# the ninth bijection is permutation to permutation
INVERSION = ("thm4.2", ((1, 3, 2), (3, 4, 2, 1)), ((1, 3, 2), (4, 3, 1, 2)))


def get_map(name: str) -> PathMap:
    try:
        return MAPS[name.strip().lower()]
    except KeyError:
        raise InvalidInput(f"unknown map {name!r}; choose from {', '.join(MAPS)}") from None


__all__ = [
    "MAPS", "INVERSION", "PathMap", "get_map", "ShapeClass", "BlockDecomposition", "classify",
    "has_shape", "stair_blocks", "to_dyck", "from_dyck", "to_smotzkin", "from_smotzkin",
    "to_schroeder", "from_schroeder", "modvee_modsvee", "modsvee_split", "modsvee_join",
    "nice_decompose", "nice_recompose",
]
