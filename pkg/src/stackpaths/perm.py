"""Permutations in one-line notation, plot geometry and pattern containment.

A permutation is a plain ``tuple`` of ints holding each of ``1..n`` once.
Positions and values are 1-based everywhere in the public API; a plot point
is the pair ``(position, value)``.

>>> normalize((3, 8, 1))
(2, 3, 1)
>>> descents((3, 1, 4, 2, 5))
[1, 3]
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

from .errors import InvalidInput

Perm = tuple[int, ...]
Point = tuple[int, int]

EMPTY: Perm = ()


def is_permutation(seq: Sequence[int]) -> bool:
    n = len(seq)
    return sorted(seq) == list(range(1, n + 1))


def as_perm(seq: Iterable[int]) -> Perm:
    """Coerce to a tuple, raising InvalidInput unless it is a permutation of 1..n."""
    try:
        p = tuple(int(x) for x in seq)
    except (TypeError, ValueError) as exc:
        raise InvalidInput(f"not a sequence of integers: {seq!r}") from exc
    if not is_permutation(p):
        raise InvalidInput(f"not a permutation of 1..{len(p)}: {p}")
    return p


def parse_perm(text: str) -> Perm:
    """Parse ``"3 2 4 1"``, ``"3,2,4,1"`` or the compact ``"3241"`` (n <= 9).

    The empty string and ``"e"`` denote the empty permutation.
    """
    s = text.strip()
    if s in ("", "e", "()", "ε"):
        return EMPTY
    if re.fullmatch(r"[1-9]+", s):
        return as_perm(int(c) for c in s)
    parts = [t for t in re.split(r"[\s,]+", s) if t]
    if not all(re.fullmatch(r"\d+", t) for t in parts):
        raise InvalidInput(f"cannot parse permutation {text!r}")
    return as_perm(int(t) for t in parts)


def format_perm(p: Sequence[int]) -> str:
    return " ".join(str(v) for v in p)


def parse_patterns(text: str) -> list[Perm]:
    """Comma-separated compact patterns, e.g. ``"132,4312"``."""
    out = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        if not re.fullmatch(r"[1-9]+", token):
            raise InvalidInput(f"bad pattern {token!r}")
        out.append(as_perm(int(c) for c in token))
    return out


def increasing(n: int) -> Perm:
    return tuple(range(1, n + 1))


def decreasing(n: int) -> Perm:
    return tuple(range(n, 0, -1))


def normalize(seq: Sequence[int]) -> Perm:
    """Replace the i-th smallest entry by i."""
    vals = list(seq)
    if any((not isinstance(v, int)) or v <= 0 for v in vals):
        raise InvalidInput(f"entries must be positive integers: {vals}")
    if len(set(vals)) != len(vals):
        raise InvalidInput(f"entries must be distinct: {vals}")
    rank = {v: i for i, v in enumerate(sorted(vals), start=1)}
    return tuple(rank[v] for v in vals)


def _std(seq: Sequence[int]) -> Perm:
    # normalize without validation, for internal hot paths
    rank = {v: i for i, v in enumerate(sorted(seq), start=1)}
    return tuple(rank[v] for v in seq)


def contains_pattern(p: Sequence[int], pattern: Sequence[int]) -> bool:
    """True if some subsequence of ``p`` is order-isomorphic to ``pattern``.

    Backtracking over positions: the j-th pattern letter is matched only at a
    position whose value is consistent with every letter already placed.
    """
    m = len(pattern)
    n = len(p)
    if m == 0:
        return True
    if m > n:
        return False
    chosen: list[int] = []

    def extend(start: int) -> bool:
        j = len(chosen)
        if j == m:
            return True
        for pos in range(start, n - (m - j) + 1):
            v = p[pos]
            ok = True
            for t, q in enumerate(chosen):
                if (p[q] < v) != (pattern[t] < pattern[j]):
                    ok = False
                    break
            if ok:
                chosen.append(pos)
                if extend(pos + 1):
                    return True
                chosen.pop()
        return False

    return extend(0)


def avoids(p: Sequence[int], *patterns: Sequence[int]) -> bool:
    return not any(contains_pattern(p, t) for t in patterns)


def descents(p: Sequence[int]) -> list[int]:
    return [i for i in range(1, len(p)) if p[i - 1] > p[i]]


def ascents(p: Sequence[int]) -> list[int]:
    return [i for i in range(1, len(p)) if p[i - 1] < p[i]]


def descent_tops(p: Sequence[int]) -> list[Point]:
    return [(i, p[i - 1]) for i in descents(p)]


def descent_bottoms(p: Sequence[int]) -> list[Point]:
    return [(i + 1, p[i]) for i in descents(p)]


def ascent_bottoms(p: Sequence[int]) -> list[Point]:
    return [(i, p[i - 1]) for i in ascents(p)]


def ascent_tops(p: Sequence[int]) -> list[Point]:
    return [(i + 1, p[i]) for i in ascents(p)]


def plot(p: Sequence[int]) -> list[Point]:
    return [(i, v) for i, v in enumerate(p, start=1)]


def inverse(p: Sequence[int]) -> Perm:
    """Reflect the plot through y = x."""
    inv = [0] * len(p)
    for i, v in enumerate(p, start=1):
        inv[v - 1] = i
    return tuple(inv)


def direct_sum(mu: Sequence[int], lam: Sequence[int]) -> Perm:
    """``mu ⊕ lam``: ``lam`` placed above and to the right of ``mu``."""
    k = len(mu)
    return tuple(mu) + tuple(v + k for v in lam)


def skew_sum(mu: Sequence[int], lam: Sequence[int]) -> Perm:
    """``mu ⊖ lam``: ``lam`` placed below and to the right of ``mu``."""
    k = len(lam)
    return tuple(v + k for v in mu) + tuple(lam)


def tail_length(p: Sequence[int]) -> int:
    """Length of the maximal run of trailing fixed points; ``Inc(n)`` gives n."""
    n = len(p)
    ell = 0
    while ell < n and p[n - 1 - ell] == n - ell:
        ell += 1
    return ell


def sum_components(p: Sequence[int]) -> list[tuple[int, int]]:
    """Half-open position ranges of the ⊕-indecomposable components (0-based)."""
    out = []
    start = 0
    hi = 0
    for i, v in enumerate(p):
        hi = max(hi, v)
        if hi == i + 1:
            out.append((start, i + 1))
            start = i + 1
    return out
