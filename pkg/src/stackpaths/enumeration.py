"""Exhaustive enumeration of uniquely sorted pattern classes and the
count cross-check harness.

Membership is decided by the CHC and the descent count, never by fertility;
the fertility histogram is kept as an independent second oracle.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Callable, Iterator, NamedTuple, Sequence

import numpy as np

from . import _kernels as K
from .bijections import MAPS, INVERSION
from .config import check_limit, limits, resolve_jobs
from .errors import InvalidInput, InvariantError
from .paths import (Family, central_binom_minus, catalan, count_family, three_catalan)
from .perm import Perm, as_perm, inverse
from .series import b_series

REPORT_VERSION = 1

Patterns = tuple[Perm, ...]


def pattern_key(patterns: Sequence[Sequence[int]]) -> str:
    """Canonical text for a pattern set, e.g. "132,4312"."""
    sep = "" if all(v < 10 for t in patterns for v in t) else "-"
    return ",".join(sep.join(str(v) for v in t) for t in patterns)


def _pattern_array(patterns: Sequence[Sequence[int]]) -> tuple[np.ndarray, np.ndarray]:
    width = max([len(t) for t in patterns] + [1])
    pats = np.zeros((len(patterns), width), dtype=np.int64)
    lens = np.zeros(len(patterns), dtype=np.int64)
    for i, t in enumerate(patterns):
        pats[i, :len(t)] = t
        lens[i] = len(t)
    return pats, lens


def _check_n(n: int) -> None:
    if n < 1 or n % 2 == 0:
        raise InvalidInput(f"uniquely sorted permutations have odd length; got n={n}")
    check_limit("enumeration", n, limits.enumeration)


def enumerate_class(n: int, patterns: Sequence[Sequence[int]] = (),
                    jobs: int | None = None) -> Iterator[Perm]:
    """Uniquely sorted permutations of length n avoiding every pattern, lexicographic."""
    _check_n(n)
    patterns = [as_perm(t) for t in patterns]
    if any(len(t) == 0 for t in patterns):
        return iter(())
    K.set_threads(resolve_jobs(jobs))
    units = K.work_units(n)
    plen = min(2, n)
    pats, lens = _pattern_array(patterns)
    counts = K.class_counts(n, units, plen, pats, lens)
    offsets = np.concatenate(([0], np.cumsum(counts)[:-1])).astype(np.int64)
    out = np.zeros((int(counts.sum()), n), dtype=np.int64)
    if len(out):
        K.class_fill(n, units, plen, pats, lens, offsets, out)
    return (tuple(int(v) for v in row) for row in out)


def count_class(n: int, patterns: Sequence[Sequence[int]] = (), jobs: int | None = None) -> int:
    _check_n(n)
    patterns = [as_perm(t) for t in patterns]
    if any(len(t) == 0 for t in patterns):
        return 0
    K.set_threads(resolve_jobs(jobs))
    units = K.work_units(n)
    pats, lens = _pattern_array(patterns)
    return int(K.class_counts(n, units, min(2, n), pats, lens).sum())


class Theorem(NamedTuple):
    name: str
    patterns: Patterns
    formula: Callable[[int], int]
    source: str


def _b_coeff(k: int) -> int:
    return b_series(k + 1)[k]


def _little_schroeder_by_generation(k: int) -> int:
    return count_family(Family.LITTLE_SCHROEDER, k)


def _pp(*ts: str) -> Patterns:
    return tuple(tuple(int(c) for c in t) for t in ts)


THEOREMS: dict[str, Theorem] = {t.name: t for t in (
    Theorem("lemma3.1", _pp("132", "231"), catalan, "C_k"),
    Theorem("lemma3.2", _pp("132", "312"), catalan, "C_k"),
    Theorem("lemma3.3", _pp("231", "312"), catalan, "C_k"),
    Theorem("thm4.1", _pp("132", "4312"), central_binom_minus, "C(2k-1,k)"),
    Theorem("thm4.2", _pp("132", "3421"), central_binom_minus, "C(2k-1,k)"),
    Theorem("thm5.3", _pp("312", "2431"), three_catalan, "C(3k,k)/(2k+1)"),
    Theorem("thm5.4", _pp("312", "3421"), three_catalan, "C(3k,k)/(2k+1)"),
    Theorem("thm5.5", _pp("312", "1432"), three_catalan, "C(3k,k)/(2k+1)"),
    Theorem("thm5.6", _pp("231", "1423"), three_catalan, "C(3k,k)/(2k+1)"),
    Theorem("thm5.7", _pp("132", "3412"), three_catalan, "C(3k,k)/(2k+1)"),
    Theorem("thm6.1", _pp("231", "1432"), _little_schroeder_by_generation,
            "little Schroeder paths (generated)"),
    Theorem("thm7.1", _pp("231", "4312"), _b_coeff, "[x^k] C(xC(x))"),
)}


def theorem_for(patterns: Sequence[Sequence[int]]) -> Theorem | None:
    key = set(map(tuple, patterns))
    for t in THEOREMS.values():
        if set(t.patterns) == key:
            return t
    return None


@dataclass(frozen=True)
class Row:
    k: int
    patterns: str
    count: int
    provenance: str     # enumerated | formula | bijection-image


PROVENANCES = ("enumerated", "formula", "bijection-image")
CSV_COLUMNS = ("k", "patterns", "count", "provenance")


@dataclass
class CountTable:
    rows: list[Row] = field(default_factory=list)

    def add(self, k: int, patterns: str, count: int, provenance: str) -> None:
        if provenance not in PROVENANCES:
            raise InvalidInput(f"unknown provenance {provenance!r}")
        self.rows.append(Row(k, patterns, int(count), provenance))

    def conflicts(self) -> list[tuple[int, str, dict[str, int]]]:
        """Keys whose provenances disagree."""
        seen: dict[tuple[int, str], dict[str, int]] = {}
        for r in self.rows:
            seen.setdefault((r.k, r.patterns), {})[r.provenance] = r.count
        return [(k, p, v) for (k, p), v in seen.items() if len(set(v.values())) > 1]

    def assert_consistent(self) -> None:
        bad = self.conflicts()
        if bad:
            raise InvariantError(f"count mismatch: {bad}")

    def to_records(self) -> list[dict]:
        return [{"k": r.k, "patterns": r.patterns, "count": r.count,
                 "provenance": r.provenance} for r in self.rows]

    def to_json(self) -> str:
        return json.dumps(self.to_records())

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in self.rows:
            w.writerow((r.k, r.patterns, r.count, r.provenance))
        return buf.getvalue()

    @classmethod
    def from_records(cls, records: Sequence[dict]) -> "CountTable":
        t = cls()
        for rec in records:
            t.add(int(rec["k"]), str(rec["patterns"]), int(rec["count"]), str(rec["provenance"]))
        return t


def _bijection_image_count(patterns: Patterns, members: list[Perm]) -> int | None:
    for m in MAPS.values():
        if set(m.patterns) == set(patterns):
            return len({m.forward(p).steps for p in members})
    if set(patterns) == set(INVERSION[1]):
        return len({inverse(p) for p in members})
    return None


def count_table(k_max: int, pattern_sets: Sequence[Sequence[Sequence[int]]],
                compare: Sequence[str] = ("formula",), jobs: int | None = None) -> CountTable:
    """Enumerated counts for every k <= k_max and pattern set, plus companion
    rows from the closed form and/or bijection images where one applies."""
    check_limit("enumeration", 2 * k_max + 1, limits.enumeration)
    table = CountTable()
    for pats in pattern_sets:
        pats = tuple(as_perm(t) for t in pats)
        key = pattern_key(pats)
        thm = theorem_for(pats)
        for k in range(k_max + 1):
            members = list(enumerate_class(2 * k + 1, pats, jobs))
            table.add(k, key, len(members), "enumerated")
            if thm is not None and "formula" in compare:
                table.add(k, key, thm.formula(k), "formula")
            if "bijection" in compare:
                c = _bijection_image_count(pats, members)
                if c is not None:
                    table.add(k, key, c, "bijection-image")
    return table


def cross_check(k_max: int = 4, slow: bool = False, jobs: int | None = None) -> dict:
    """Check every enumeration theorem for k <= k_max; returns a JSON-ready report.

    Each row compares the enumerated class size with the closed form. The
    bijection rows also verify round trips, family validity and that the
    image is the whole path family; the inversion and equal-count rows
    compare two sweeps directly.
    """
    if slow:
        k_max = max(k_max, 5)
    check_limit("enumeration", 2 * k_max + 1, limits.enumeration)
    rows = []
    classes: dict[tuple[str, int], list[Perm]] = {}

    def members(pats: Patterns, k: int) -> list[Perm]:
        key = (pattern_key(pats), k)
        if key not in classes:
            classes[key] = list(enumerate_class(2 * k + 1, pats, jobs))
        return classes[key]

    for t in THEOREMS.values():
        for k in range(k_max + 1):
            got = len(members(t.patterns, k))
            want = t.formula(k)
            rows.append({"check": "count", "theorem": t.name, "k": k,
                         "patterns": pattern_key(t.patterns), "enumerated": got,
                         "expected": want, "source": t.source, "ok": got == want})

    for m in MAPS.values():
        for k in range(k_max + 1):
            cls = members(m.patterns, k)
            images = set()
            round_trip = valid = True
            for p in cls:
                path = m.forward(p)
                images.add(path.steps)
                valid &= path.is_valid() and path.k == k
                round_trip &= m.backward(path) == p
            fam = count_family(m.family, k)
            rows.append({"check": "bijection", "theorem": m.name, "k": k,
                         "patterns": pattern_key(m.patterns), "enumerated": len(cls),
                         "images": len(images), "family": m.family.value,
                         "family_count": fam, "round_trip": round_trip, "valid": valid,
                         "ok": round_trip and valid and len(images) == len(cls) == fam})

    name, src, dst = INVERSION
    for k in range(k_max + 1):
        a = set(members(src, k))
        b = set(members(dst, k))
        ok = {inverse(p) for p in a} == b and {inverse(p) for p in b} == a
        rows.append({"check": "inversion", "theorem": name, "k": k,
                     "patterns": f"{pattern_key(src)} <-> {pattern_key(dst)}",
                     "enumerated": len(a), "expected": len(b), "ok": ok})

    eq_a, eq_b = THEOREMS["thm5.7"].patterns, THEOREMS["thm5.6"].patterns
    for k in range(k_max + 1):
        x, y = len(members(eq_a, k)), len(members(eq_b, k))
        rows.append({"check": "equal-count", "theorem": "thm5.7", "k": k,
                     "patterns": f"{pattern_key(eq_a)} == {pattern_key(eq_b)}",
                     "enumerated": x, "expected": y, "ok": x == y})

    return {"version": REPORT_VERSION, "k_max": k_max, "slow": slow,
            "rows": rows, "ok": all(r["ok"] for r in rows)}
