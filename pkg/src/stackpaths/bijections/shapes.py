"""Structural shape tests.

Each test works on the plot directly rather than through pattern
avoidance, so that the two can be checked against each other.
"""

from __future__ import annotations

import enum
from typing import NamedTuple, Sequence

from ..errors import PreconditionError
from ..perm import Perm, _std, as_perm, sum_components, tail_length


class ShapeClass(str, enum.Enum):
    VEE = "vee"
    SVEE = "svee"
    LAYERED = "layered"
    MODVEE = "modvee"
    MODSVEE = "modsvee"
    STAIR_SVEE = "stair-svee"
    STAIR_LAYERED = "stair-layered"
    SVEE_INCREASING = "svee-increasing"
    VEE_LAYERED = "vee-layered"
    VEE_STEP = "vee-step"

    @classmethod
    def parse(cls, name: "str | ShapeClass") -> "ShapeClass":
        if isinstance(name, ShapeClass):
            return name
        key = name.strip().lower().replace("_", "-")
        for s in cls:
            if key in (s.value, s.value.replace("-", "")):
                return s
        raise PreconditionError(f"unknown shape {name!r}")


def is_vee(p: Sequence[int]) -> bool:
    """L 1 R with L decreasing and R increasing."""
    if not p:
        return True
    i = list(p).index(min(p))
    left, right = p[:i], p[i + 1:]
    return (all(a > b for a, b in zip(left, left[1:]))
            and all(a < b for a, b in zip(right, right[1:])))


def is_svee(p: Sequence[int]) -> bool:
    """Every entry after the first is a new maximum or a new minimum."""
    if not p:
        return True
    lo = hi = p[0]
    for v in p[1:]:
        if v > hi:
            hi = v
        elif v < lo:
            lo = v
        else:
            return False
    return True


def is_decreasing(p: Sequence[int]) -> bool:
    return all(a > b for a, b in zip(p, p[1:]))


def is_increasing(p: Sequence[int]) -> bool:
    return all(a < b for a, b in zip(p, p[1:]))


def is_layered(p: Sequence[int]) -> bool:
    """A direct sum of decreasing permutations."""
    return all(is_decreasing(p[a:b]) for a, b in sum_components(p))


def is_modsvee(p: Sequence[int]) -> bool:
    """pi_1 sigma with sigma svee and pi_1 above the horizontal sigma_1."""
    if is_svee(p):
        return True
    return len(p) >= 2 and p[0] > p[1] and is_svee(p[1:])


def is_modvee(p: Sequence[int]) -> bool:
    """A vee plus one lowest point right of the vee's vertical."""
    if is_vee(p):
        return True
    if len(p) < 3:
        return False
    p = list(p)
    i1 = p.index(1)
    i2 = p.index(2)
    rest = p[:i1] + p[i1 + 1:]
    return i1 > i2 and is_vee(rest)


def _lambda_minus_one(block: Sequence[int], inner) -> bool:
    # block = lambda (-) 1 with lambda of the given shape; a single point is (empty) (-) 1
    if len(block) == 1:
        return True
    return block[-1] == min(block) and inner(_std(block[:-1]))


def _stair(p: Sequence[int], inner) -> bool:
    n = len(p)
    core = p[:n - tail_length(p)]
    return all(_lambda_minus_one(core[a:b], inner) for a, b in sum_components(core))


def is_stair_svee(p: Sequence[int]) -> bool:
    return _stair(p, is_svee)


def is_stair_layered(p: Sequence[int]) -> bool:
    return _stair(p, is_layered)


class Block(NamedTuple):
    start: int      # 1-based, inclusive
    end: int
    kind: str


class BlockDecomposition(NamedTuple):
    blocks: tuple[Block, ...]
    tail: int


def stair_blocks(p: Sequence[int], shape: "ShapeClass | str") -> BlockDecomposition:
    """Blocks lambda (-) 1 of a stair shape, left to right, followed by the tail.

    The blocks are the sum-components of the permutation with its tail
    removed; the tail (if any) is reported as a final block of kind "tail".
    """
    shape = ShapeClass.parse(shape)
    inner = {ShapeClass.STAIR_SVEE: is_svee, ShapeClass.STAIR_LAYERED: is_layered}.get(shape)
    if inner is None:
        raise PreconditionError(f"{shape.value} is not a stair shape")
    p = tuple(p)
    ell = tail_length(p)
    core = p[:len(p) - ell]
    blocks = []
    for a, b in sum_components(core):
        if not _lambda_minus_one(core[a:b], inner):
            raise PreconditionError(f"{p} is not {shape.value}")
        blocks.append(Block(a + 1, b, f"{inner.__name__[3:]}-1"))
    if ell:
        blocks.append(Block(len(core) + 1, len(p), "tail"))
    return BlockDecomposition(tuple(blocks), ell)


# svee-increasing: svee whose above-horizontal points may be Inc(m) (-) 1 blocks

def svee_increasing_items(p: Sequence[int]) -> list[tuple[str, int]] | None:
    """Left-to-right items after the first point: ("min", 1), ("max", 1) or ("block", m+1)."""
    if not p:
        return []
    lo = hi = p[0]
    out = []
    i = 1
    n = len(p)
    while i < n:
        v = p[i]
        if v < lo:
            lo = v
            out.append(("min", 1))
            i += 1
            continue
        if v == hi + 1:
            hi = v
            out.append(("max", 1))
            i += 1
            continue
        # Inc(m) (-) 1 occupying hi+1 .. hi+m+1
        j = i
        while j < n and p[j] == hi + 2 + (j - i):
            j += 1
        m = j - i
        if m == 0 or j >= n or p[j] != hi + 1:
            return None
        out.append(("block", m + 1))
        hi += m + 1
        i = j + 1
    return out


def is_svee_increasing(p: Sequence[int]) -> bool:
    return svee_increasing_items(p) is not None


# vee-layered: vee whose right-of-vertical points may be decreasing layers

def vee_layered_items(p: Sequence[int]) -> list[tuple[str, int]] | None:
    """Items by increasing value above the entry 1: ("left", 1) or ("layer", s)."""
    n = len(p)
    if n == 0:
        return []
    pos = {v: i for i, v in enumerate(p)}
    left = right = pos[1]
    v = 2
    out = []
    while v <= n:
        i = pos[v]
        if i == left - 1:
            left = i
            out.append(("left", 1))
            v += 1
            continue
        if i <= right:
            return None
        # a layer occupies right+1 .. right+s with values v+s-1 down to v
        s = i - right
        for t in range(s):
            if p[right + 1 + t] != v + s - 1 - t:
                return None
        out.append(("layer", s))
        right = i
        v += s
    return out


def is_vee_layered(p: Sequence[int]) -> bool:
    return vee_layered_items(p) is not None


def is_vee_step(p: Sequence[int]) -> bool:
    items = vee_layered_items(p)
    return items is not None and all(s <= 2 for kind, s in items if kind == "layer")


TESTS = {
    ShapeClass.VEE: is_vee,
    ShapeClass.SVEE: is_svee,
    ShapeClass.LAYERED: is_layered,
    ShapeClass.MODVEE: is_modvee,
    ShapeClass.MODSVEE: is_modsvee,
    ShapeClass.STAIR_SVEE: is_stair_svee,
    ShapeClass.STAIR_LAYERED: is_stair_layered,
    ShapeClass.SVEE_INCREASING: is_svee_increasing,
    ShapeClass.VEE_LAYERED: is_vee_layered,
    ShapeClass.VEE_STEP: is_vee_step,
}


def has_shape(p: Sequence[int], shape: "ShapeClass | str") -> bool:
    return TESTS[ShapeClass.parse(shape)](as_perm(p))


def classify(p: Sequence[int]) -> set[ShapeClass]:
    p = as_perm(p)
    return {s for s, test in TESTS.items() if test(p)}


# constructors from up/down words (A = ascent top, B = descent bottom)

def svee_from_word(word: str) -> Perm:
    """The svee whose entries 2..m are new maxima at 'A' and new minima at 'B'."""
    vals = [0]
    lo = hi = 0
    for c in word:
        if c == "A":
            hi += 1
            vals.append(hi)
        else:
            lo -= 1
            vals.append(lo)
    return _std(vals)


def layered_from_word(word: str) -> Perm:
    """The layered permutation whose descents sit exactly at the 'B' letters."""
    sizes = [1]
    for c in word:
        if c == "A":
            sizes.append(1)
        else:
            sizes[-1] += 1
    out: list[int] = []
    base = 0
    for s in sizes:
        out.extend(range(base + s, base, -1))
        base += s
    return tuple(out)


def vee_from_items(items: Sequence[tuple[str, int]]) -> Perm:
    """Inverse of vee_layered_items."""
    left: list[int] = []
    right: list[int] = []
    v = 2
    for kind, s in items:
        if kind == "left":
            left.append(v)
            v += 1
        else:
            right.extend(range(v + s - 1, v - 1, -1))
            v += s
    return tuple(reversed(left)) + (1,) + tuple(right)
