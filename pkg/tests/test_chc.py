from itertools import permutations

import pytest

from stackpaths.chc import (Hook, build_chc, check_partition, hook_from, is_nice,
                            is_uniquely_sorted, lies_strictly_below, lies_weakly_below,
                            partition_gaps)
from stackpaths.errors import PreconditionError
from stackpaths.perm import ascent_tops, descent_tops

HOOKED12 = (2, 7, 3, 5, 9, 4, 8, 1, 6, 10, 11, 12)


def test_twelve_point_hooks():
    assert build_chc(HOOKED12) == (Hook((2, 7), (5, 9)), Hook((5, 9), (11, 11)),
                               Hook((7, 8), (10, 10)))


def test_no_descents_gives_empty():
    assert build_chc((1, 2, 3, 4)) == ()


def test_absent():
    assert build_chc((2, 3, 1)) is None


def test_below_predicates():
    h = Hook((2, 7), (5, 9))
    assert lies_weakly_below((5, 9), h)
    assert not lies_strictly_below((5, 9), h)
    assert lies_strictly_below((4, 5), h)
    assert not lies_weakly_below((2, 3), h)
    assert not lies_weakly_below((6, 4), h)


class TestPartition:
    def test_examples(self):
        assert check_partition((3, 1, 4, 2, 5))
        assert check_partition((2, 1, 3))

    def test_gaps_when_not_uniquely_sorted(self):
        assert not is_uniquely_sorted(HOOKED12)
        assert partition_gaps(HOOKED12) == [(2, 7), (4, 5), (7, 8), (9, 6), (12, 12)]
        with pytest.raises(PreconditionError):
            check_partition(HOOKED12)

    def test_exhaustive(self):
        for n in (1, 3, 5, 7, 9):
            for p in permutations(range(1, n + 1)):
                if is_uniquely_sorted(p):
                    assert check_partition(p), p
                    assert p[-1] == n


def test_structure_exhaustive():
    for n in range(1, 9):
        for p in permutations(range(1, n + 1)):
            chc = build_chc(p)
            if chc is None:
                continue
            tops = set(descent_tops(p))
            ends = set(ascent_tops(p)) | {(n, p[-1])}
            assert len({h.ne for h in chc}) == len(chc)
            for t, h in enumerate(chc):
                assert h.sw in tops and h.ne in ends
                assert h.sw[0] < h.ne[0] and h.sw[1] < h.ne[1]
                # no NE endpoint lies weakly below a hook placed after it
                assert not any(lies_weakly_below(h.ne, g) for g in chc[t + 1:])


class TestNice:
    def test_examples(self):
        assert is_nice((2, 1, 3))
        assert is_nice((8, 2, 1, 4, 3, 7, 6, 5, 10, 11, 9, 12, 13))
        assert not is_nice((3, 2, 4, 1, 9, 8, 7, 10, 11, 6, 5, 12, 13))

    def test_requires_uniquely_sorted(self):
        with pytest.raises(PreconditionError):
            is_nice((1, 2, 3))

    def test_hook_from(self):
        chc = build_chc((3, 2, 4, 1, 9, 8, 7, 10, 11, 6, 5, 12, 13))
        h = [g for g in chc if g.ne == (13, 13)][0]
        assert h.sw == (9, 11)
        assert hook_from(chc, 9) == h
        assert hook_from(chc, 3) == Hook((3, 4), (5, 9))
        assert hook_from(chc, 2) is None
