"""Four bijections between uniquely sorted classes and S-Motzkin paths.

Stair shapes start from (EU)^k, one EU per descent bottom, and place one D
per ascent top. Let n be the number of descent bottoms left of the ascent
top. An ascent top inside a block puts its D after the n-th U; an ascent
top that opens a new block puts its D after the (n+1)-th E. D's sharing an
anchor keep the left-to-right order of their ascent tops. The tail adds
one trailing D per point.

svee-increasing: left to right after the first point, a new minimum gives
EU, a single new maximum gives D and a block Inc(m) (-) 1 gives E D^m U.

vee-layered: by value, top to bottom and skipping the entry 1, a point left
of the vertical gives D and a layer of size s gives E D^(s-1) U.
"""

from __future__ import annotations

from typing import Sequence

from ..errors import PreconditionError
from ..paths import Family, LatticePath
from ..perm import Perm, _std, direct_sum, increasing, skew_sum, sum_components, tail_length
from ._common import require_member, require_path
from .shapes import (ShapeClass, layered_from_word, svee_from_word, svee_increasing_items,
                     vee_from_items, vee_layered_items)

SMOTZKIN_SHAPES = (ShapeClass.STAIR_SVEE, ShapeClass.STAIR_LAYERED,
                   ShapeClass.SVEE_INCREASING, ShapeClass.VEE_LAYERED)


def _shape(shape) -> ShapeClass:
    shape = ShapeClass.parse(shape)
    if shape not in SMOTZKIN_SHAPES:
        raise PreconditionError(f"no S-Motzkin path map for shape {shape.value}")
    return shape


def _stair_to(p: Perm) -> str:
    n = len(p)
    k = (n - 1) // 2
    # the first point is never labeled, even when it is the whole tail
    ell = min(tail_length(p), n - 1)
    core = p[:n - ell]
    starts = {a for a, _ in sum_components(core)}
    after_u = [0] * (k + 1)      # in-block ascent tops, by bottoms seen
    after_e = [0] * (k + 2)      # block-opening ascent tops, anchored at E_{n+1}
    seen = 0
    for i in range(1, len(core)):
        if core[i] < core[i - 1]:
            seen += 1
        elif i in starts:
            after_e[seen + 1] += 1
        else:
            after_u[seen] += 1
    if after_u[0] or after_e[1]:
        raise PreconditionError(f"{p} has an ascent top before any descent")
    out = []
    for j in range(1, k + 1):
        out.append("E" + "D" * after_e[j] + "U" + "D" * after_u[j])
    return "".join(out) + "D" * ell


def _stair_from(steps: str, inner) -> Perm:
    # group the path into E D^a U D^b pieces; trailing D's after the last U are the tail
    pieces = []
    i = 0
    m = len(steps)
    while i < m and steps[i] == "E":
        i += 1
        a = 0
        while steps[i] == "D":
            a += 1
            i += 1
        i += 1  # the U
        b = 0
        while i < m and steps[i] == "D":
            b += 1
            i += 1
        pieces.append((a, b))
    if not pieces:
        return (1,)
    ell = pieces[-1][1]
    # labels of positions 2.. of the core: 'N' opens a block, 'A' ascends in-block, 'B' descends
    labels = []
    prev_b = 0
    for a, b in pieces:
        labels.extend("N" * a)
        labels.extend("A" * prev_b)
        labels.append("B")
        prev_b = b
    # split the core into blocks at each 'N'
    blocks: list[str] = [""]
    for c in labels:
        if c == "N":
            blocks.append("")
        else:
            blocks[-1] += c
    out: Perm = ()
    for word in blocks:
        # word labels positions 2.. of the block; the final letter is its bottom
        if word:
            if word[-1] != "B":
                raise PreconditionError(f"{steps!r} does not describe a stair permutation")
            block = skew_sum(inner(word[:-1]), (1,))
        else:
            block = (1,)
        out = direct_sum(out, block)
    return direct_sum(out, increasing(ell))


def _svee_inc_to(p: Perm) -> str:
    items = svee_increasing_items(p)
    out = []
    for kind, size in items:
        if kind == "min":
            out.append("EU")
        elif kind == "max":
            out.append("D")
        else:
            out.append("E" + "D" * (size - 1) + "U")
    return "".join(out)


def _svee_inc_from(steps: str) -> Perm:
    vals = [0]
    lo = hi = 0
    i = 0
    while i < len(steps):
        if steps[i] == "D":
            hi += 1
            vals.append(hi)
            i += 1
            continue
        j = i + 1
        while steps[j] == "D":
            j += 1
        m = j - i - 1
        if m == 0:
            lo -= 1
            vals.append(lo)
        else:
            vals.extend(range(hi + 2, hi + m + 2))
            vals.append(hi + 1)
            hi += m + 1
        i = j + 1
    return _std(vals)


def _vee_layered_to(p: Perm) -> str:
    items = vee_layered_items(p)
    out = []
    for kind, size in reversed(items):
        out.append("D" if kind == "left" else "E" + "D" * (size - 1) + "U")
    return "".join(out)


def _factor(steps: str) -> list[tuple[str, int]]:
    """Split into D and E D^m U factors, as ("left", 1) / ("layer", m+1)."""
    out = []
    i = 0
    while i < len(steps):
        if steps[i] == "D":
            out.append(("left", 1))
            i += 1
            continue
        j = i + 1
        while steps[j] == "D":
            j += 1
        out.append(("layer", j - i))
        i = j + 1
    return out


def _vee_layered_from(steps: str) -> Perm:
    return vee_from_items(list(reversed(_factor(steps))))


def to_smotzkin(p: Sequence[int], shape: "ShapeClass | str") -> LatticePath:
    shape = _shape(shape)
    p = require_member(p, shape)
    if shape in (ShapeClass.STAIR_SVEE, ShapeClass.STAIR_LAYERED):
        steps = _stair_to(p)
    elif shape is ShapeClass.SVEE_INCREASING:
        steps = _svee_inc_to(p)
    else:
        steps = _vee_layered_to(p)
    return LatticePath(steps, Family.SMOTZKIN)


def from_smotzkin(path: "LatticePath | str", shape: "ShapeClass | str") -> Perm:
    shape = _shape(shape)
    steps = require_path(path, Family.SMOTZKIN)
    if shape is ShapeClass.STAIR_SVEE:
        return _stair_from(steps, svee_from_word)
    if shape is ShapeClass.STAIR_LAYERED:
        return _stair_from(steps, layered_from_word)
    if shape is ShapeClass.SVEE_INCREASING:
        return _svee_inc_from(steps)
    return _vee_layered_from(steps)
