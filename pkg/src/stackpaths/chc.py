"""Canonical hook configurations.

Hooks are attached right to left: the hook for the last descent takes the
leftmost point strictly above and to the right of its descent top, and each
earlier hook takes the leftmost such point that does not lie weakly below a
hook already placed. If some descent finds no candidate, there is no CHC.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

from .errors import PreconditionError
from .perm import Perm, Point, as_perm, descent_bottoms, descents


class Hook(NamedTuple):
    sw: Point
    ne: Point


CHC = tuple[Hook, ...]


def lies_weakly_below(point: Point, hook: Hook) -> bool:
    r, v = point
    return hook.sw[0] < r <= hook.ne[0] and v <= hook.ne[1]


def lies_strictly_below(point: Point, hook: Hook) -> bool:
    r, v = point
    return hook.sw[0] < r < hook.ne[0] and v < hook.ne[1]


def build_chc(p: Sequence[int]) -> CHC | None:
    """Return the hooks in descent order, or None when no CHC exists."""
    p = as_perm(p)
    n = len(p)
    ds = descents(p)
    hooks: list[Hook | None] = [None] * len(ds)
    for t in range(len(ds) - 1, -1, -1):
        i = ds[t]
        sw = (i, p[i - 1])
        placed = hooks[t + 1:]
        ne = None
        for j in range(i + 1, n + 1):
            if p[j - 1] <= sw[1]:
                continue
            if any(lies_weakly_below((j, p[j - 1]), h) for h in placed):
                continue
            ne = (j, p[j - 1])
            break
        if ne is None:
            return None
        hooks[t] = Hook(sw, ne)
    return tuple(hooks)


def has_chc(p: Sequence[int]) -> bool:
    return build_chc(p) is not None


def is_uniquely_sorted(p: Sequence[int]) -> bool:
    """Odd length, (n - 1)/2 descents and a CHC."""
    p = as_perm(p)
    n = len(p)
    return n % 2 == 1 and len(descents(p)) == (n - 1) // 2 and has_chc(p)


def _require_uniquely_sorted(p: Perm) -> CHC:
    n = len(p)
    chc = build_chc(p)
    if n % 2 == 0 or chc is None or len(chc) != (n - 1) // 2:
        raise PreconditionError(f"{p} is not uniquely sorted")
    return chc


def check_partition(p: Sequence[int]) -> bool:
    """Descent bottoms and NE endpoints split the plot minus its first point."""
    p = as_perm(p)
    chc = _require_uniquely_sorted(p)
    bottoms = set(descent_bottoms(p))
    ne = {h.ne for h in chc}
    rest = {(i, p[i - 1]) for i in range(2, len(p) + 1)}
    return not (bottoms & ne) and (bottoms | ne) == rest


def partition_gaps(p: Sequence[int]) -> list[Point]:
    """Points (excluding the first) that are neither descent bottoms nor NE endpoints.

    Defined for any sorted permutation; empty for uniquely sorted ones.
    """
    p = as_perm(p)
    chc = build_chc(p)
    if chc is None:
        raise PreconditionError(f"{p} has no canonical hook configuration")
    covered = set(descent_bottoms(p)) | {h.ne for h in chc}
    return [(i, p[i - 1]) for i in range(2, len(p) + 1) if (i, p[i - 1]) not in covered]


def is_nice(p: Sequence[int]) -> bool:
    """The hook ending at the last point starts at the first point."""
    p = as_perm(p)
    chc = _require_uniquely_sorted(p)
    n = len(p)
    for h in chc:
        if h.ne == (n, p[n - 1]):
            return h.sw[0] == 1
    return False


def hook_from(chc: CHC, position: int) -> Hook | None:
    for h in chc:
        if h.sw[0] == position:
            return h
    return None
