"""The stack-sorting map, fertility and the uniquely sorted test.

Fertility is counted by brute force: every sigma in S_n is pushed through
the stack and compared with the target. The sweep is split into work units
by the first two entries and run by the compiled kernels.
"""

from __future__ import annotations

from collections.abc import Mapping
from itertools import permutations
from math import factorial
from typing import Iterator, Sequence

import numpy as np

from . import _kernels as K
from .chc import is_uniquely_sorted  # noqa: F401  (re-exported)
from .config import check_limit, limits, resolve_jobs
from .perm import Perm, as_perm


def stack_sort(p: Sequence[int]) -> Perm:
    """s(LnR) = s(L) s(R) n, with s of the empty permutation empty."""
    p = as_perm(p)
    return _s(p)


def _s(p: Perm) -> Perm:
    if not p:
        return p
    i = p.index(max(p))
    return _s(p[:i]) + _s(p[i + 1:]) + (p[i],)


def stack_sort_iterative(p: Sequence[int]) -> Perm:
    """One pass through a stack that only holds decreasing runs."""
    stack: list[int] = []
    out: list[int] = []
    for x in p:
        while stack and stack[-1] < x:
            out.append(stack.pop())
        stack.append(x)
    out.extend(reversed(stack))
    return tuple(out)


def _units(n: int, jobs: int) -> tuple[np.ndarray, int]:
    K.set_threads(jobs)
    units = K.work_units(n)
    return units, min(2, n)


def preimages(p: Sequence[int], jobs: int | None = None) -> list[Perm]:
    """All sigma with s(sigma) = p, in lexicographic order."""
    p = as_perm(p)
    n = len(p)
    check_limit("fertility", n, limits.fertility)
    if n == 0:
        return [()]
    units, plen = _units(n, resolve_jobs(jobs))
    target = np.array(p, dtype=np.int64)
    counts = K.preimage_counts(target, units, plen)
    offsets = np.concatenate(([0], np.cumsum(counts)[:-1])).astype(np.int64)
    out = np.zeros((int(counts.sum()), n), dtype=np.int64)
    if len(out):
        K.preimage_fill(target, units, plen, offsets, out)
    return [tuple(int(v) for v in row) for row in out]


def fertility(p: Sequence[int], jobs: int | None = None) -> int:
    p = as_perm(p)
    n = len(p)
    check_limit("fertility", n, limits.fertility)
    if n == 0:
        return 1
    if p[-1] != n:
        # every nonempty image ends in its maximum
        return 0
    units, plen = _units(n, resolve_jobs(jobs))
    return int(K.preimage_counts(np.array(p, dtype=np.int64), units, plen).sum())


def _unrank(r: int, m: int) -> list[int]:
    vals = list(range(1, m + 1))
    out = []
    for i in range(m, 0, -1):
        f = factorial(i - 1)
        q, r = divmod(r, f)
        out.append(vals.pop(q))
    return out


class FertilityHistogram(Mapping):
    """fertility(pi) for every pi in S_n, backed by a dense count array.

    Only permutations ending in n can be images, so counts are stored by the
    lexicographic rank of the first n - 1 entries. Looking up any other
    permutation of length n gives 0.
    """

    def __init__(self, n: int, counts: np.ndarray):
        self.n = n
        self._counts = counts

    def _rank(self, p: Perm) -> int | None:
        n = self.n
        if len(p) != n or (n and p[-1] != n):
            return None
        if n == 0:
            return 0
        a = np.array(p, dtype=np.int64)
        fact = np.array([factorial(i) for i in range(n + 1)], dtype=np.int64)
        return int(K.lex_rank(a, n - 1, fact))

    def __getitem__(self, p) -> int:
        p = tuple(p)
        if len(p) != self.n or not sorted(p) == list(range(1, self.n + 1)):
            raise KeyError(p)
        r = self._rank(p)
        return 0 if r is None else int(self._counts[r])

    def __iter__(self) -> Iterator[Perm]:
        return permutations(range(1, self.n + 1))

    def __len__(self) -> int:
        return factorial(self.n)

    def _perm_at(self, r: int) -> Perm:
        if self.n == 0:
            return ()
        return tuple(_unrank(r, self.n - 1)) + (self.n,)

    def support(self) -> list[Perm]:
        """Sorted permutations (positive fertility), lexicographic."""
        return [self._perm_at(int(r)) for r in np.flatnonzero(self._counts)]

    def with_count(self, c: int) -> list[Perm]:
        if c == 0:
            return [q for q in self if self[q] == 0]
        return [self._perm_at(int(r)) for r in np.flatnonzero(self._counts == c)]

    def total(self) -> int:
        return int(self._counts.sum())


def fertility_histogram(n: int, jobs: int | None = None) -> FertilityHistogram:
    """Apply s to every sigma in S_n and bucket by image."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    check_limit("histogram", n, limits.histogram)
    if n <= 1:
        return FertilityHistogram(n, np.ones(1, dtype=np.int64))
    jobs = resolve_jobs(jobs)
    units, plen = _units(n, jobs)
    fact = np.array([factorial(i) for i in range(n + 1)], dtype=np.int64)
    workers = max(1, min(jobs, len(units)))
    counts = K.image_histogram(n, units, plen, workers, fact)
    return FertilityHistogram(n, counts)
