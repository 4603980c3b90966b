"""Acceptance suite: one test per criterion, each printing a single PASS/FAIL line."""

import time

import pytest

from stackpaths.bijections import INVERSION, MAPS
from stackpaths.chc import Hook, build_chc, check_partition, is_uniquely_sorted, partition_gaps
from stackpaths.enumeration import THEOREMS, enumerate_class
from stackpaths.errors import PreconditionError
from stackpaths.paths import count_family, three_catalan
from stackpaths.perm import descents, inverse
from stackpaths.series import b_series, check_btilde_identity, check_sum_identity
from stackpaths.stacksort import fertility, fertility_histogram, stack_sort

HOOKED12 = (2, 7, 3, 5, 9, 4, 8, 1, 6, 10, 11, 12)


def _fails(bad):
    return f"; failing: {bad}" if bad else ""


def test_c01_worked_examples(report):
    t0 = time.perf_counter()
    checks = {
        "s(516243)": stack_sort((5, 1, 6, 2, 4, 3)) == (1, 5, 2, 3, 4, 6),
        "CHC": build_chc(HOOKED12) == (Hook((2, 7), (5, 9)), Hook((5, 9), (11, 11)),
                                   Hook((7, 8), (10, 10))),
        "31425": is_uniquely_sorted((3, 1, 4, 2, 5)),
        "24135": not is_uniquely_sorted((2, 4, 1, 3, 5)),
    }
    ms = 1000 * (time.perf_counter() - t0)
    bad = [k for k, v in checks.items() if not v]
    assert report(1, not bad, f"worked examples ({ms:.1f} ms){_fails(bad)}")


GOLDEN = [
    ("lemma3.1", (10, 6, 5, 3, 2, 1, 4, 7, 8, 9, 11), "UDUUUDDUDD"),
    ("thm5.3", (3, 2, 4, 1, 9, 8, 7, 10, 11, 6, 5, 12, 13), "EUDEUEDUEUDDEUEUDD"),
    ("thm5.4", (3, 2, 4, 1, 8, 7, 6, 9, 11, 10, 5, 12, 13), "EUDEUEDUEUDDEUEUDD"),
    ("thm5.5", (4, 3, 2, 5, 7, 6, 1, 9, 10, 8, 11), "EUEUDEDUEUEDDUD"),
    ("thm5.6", (9, 2, 1, 5, 4, 3, 6, 8, 7, 10, 11), "EUEUDEDUEUEDDUD"),
    ("thm6.1", (7, 3, 2, 1, 5, 4, 6, 8, 9), "UUHDUDD"),
]


def test_c02_golden_paths(report):
    bad = []
    for name, perm, steps in GOLDEN:
        m = MAPS[name]
        if m.forward(perm).steps != steps or m.backward(steps) != perm:
            bad.append(name)
    assert report(2, not bad, f"{len(GOLDEN)} golden paths and inverses{_fails(bad)}")


def test_c03_dual_oracle(report):
    t0 = time.perf_counter()
    bad = []
    for n in (1, 3, 5, 7, 9, 11):
        hist = fertility_histogram(n)
        by_fertility = set(hist.with_count(1))
        # sorted (positive fertility) with (n-1)/2 descents
        by_descents = {p for p in hist.support() if len(descents(p)) == (n - 1) // 2}
        by_chc = set(enumerate_class(n))
        if not by_fertility == by_descents == by_chc:
            bad.append(n)
    secs = time.perf_counter() - t0
    ok = not bad and secs <= 120
    assert report(3, ok, f"fertility-1 set == characterization, n <= 11 ({secs:.1f} s)"
                         f"{_fails(bad)}")


@pytest.mark.slow
def test_c04_twelve_point_fertility(report):
    t0 = time.perf_counter()
    f = fertility(HOOKED12)
    secs = time.perf_counter() - t0
    assert report(4, f == 160 and secs <= 600, f"fertility of the length-12 example = {f} "
                                               f"({secs:.1f} s)")


def test_c05_counts(report):
    t0 = time.perf_counter()
    assert b_series(5).coeffs == (1, 1, 3, 11, 44)
    bad = []
    for t in THEOREMS.values():
        got = [len(list(enumerate_class(2 * k + 1, t.patterns))) for k in range(6)]
        want = [t.formula(k) for k in range(6)]
        if got != want:
            bad.append((t.name, got, want))
    secs = time.perf_counter() - t0
    ok = not bad and secs <= 300
    assert report(5, ok, f"{len(THEOREMS)} classes match closed forms for k <= 5 "
                         f"({secs:.1f} s){_fails(bad)}")


def test_c06_bijectivity(report, slow_mode):
    t0 = time.perf_counter()
    k_max = 5 if slow_mode else 4
    bad = []
    for m in MAPS.values():
        for k in range(k_max + 1):
            members = list(enumerate_class(2 * k + 1, m.patterns))
            images = set()
            for p in members:
                path = m.forward(p)
                if not (path.is_valid() and path.k == k and m.backward(path) == p):
                    bad.append((m.name, p))
                images.add(path.steps)
            if not len(images) == len(members) == count_family(m.family, k):
                bad.append((m.name, k))
    name, src, dst = INVERSION
    for k in range(k_max + 1):
        a = list(enumerate_class(2 * k + 1, src))
        b = set(enumerate_class(2 * k + 1, dst))
        images = {inverse(p) for p in a}
        if images != b or any(inverse(inverse(p)) != p for p in a):
            bad.append((name, k))
    secs = time.perf_counter() - t0
    ok = not bad and secs <= 120
    assert report(6, ok, f"{len(MAPS) + 1} bijections for k <= {k_max} ({secs:.1f} s)"
                         f"{_fails(bad[:3])}")


def test_c07_inversion(report):
    bad = []
    for n in (1, 3, 5, 7, 9):
        a = set(enumerate_class(n, [(1, 3, 2), (3, 4, 2, 1)]))
        b = set(enumerate_class(n, [(1, 3, 2), (4, 3, 1, 2)]))
        if {inverse(p) for p in a} != b or {inverse(p) for p in b} != a:
            bad.append(n)
    assert report(7, not bad,
                  f"inversion swaps U(132,3421) and U(132,4312), n <= 9{_fails(bad)}")


def test_c08_partition(report):
    bad = []
    checked = 0
    for n in range(1, 10):
        for p in fertility_histogram(n).with_count(1):
            checked += 1
            if not check_partition(p):
                bad.append(p)
    fails_at_78 = (7, 8) in partition_gaps(HOOKED12)
    try:
        check_partition(HOOKED12)
        example_rejected = False
    except PreconditionError:
        example_rejected = True
    ok = not bad and fails_at_78 and example_rejected
    assert report(8, ok, f"partition holds for {checked} uniquely sorted perms, n <= 9; "
                         f"example uncovered at (7,8): {fails_at_78}")


def test_c09_path_counts(report):
    t0 = time.perf_counter()
    smotzkin = all(count_family("smotzkin", k) == three_catalan(k) for k in range(8))
    halves = all(2 * count_family("littleschroeder", k) == count_family("schroeder", k)
                 for k in range(1, 9))
    secs = time.perf_counter() - t0
    ok = smotzkin and halves and secs <= 60
    assert report(9, ok, f"S-Motzkin k <= 7, little Schroeder halves k <= 8 ({secs:.1f} s)")


def test_c10_series_identities(report):
    sums = all(check_sum_identity(k) for k in range(1, 13))
    btilde = check_btilde_identity(25)
    assert report(10, sums and btilde, f"sum identity k <= 12: {sums}; "
                                       f"functional equation to 25 terms: {btilde}")
