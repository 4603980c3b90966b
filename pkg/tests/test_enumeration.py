import json

import pytest

import oracles
from stackpaths.chc import check_partition
from stackpaths.enumeration import (CSV_COLUMNS, THEOREMS, CountTable, count_class, count_table,
                                    cross_check, enumerate_class, pattern_key, theorem_for)
from stackpaths.errors import InvalidInput, InvariantError, ResourceLimit

PATTERN_SETS = [
    [], [(1, 3, 2)], [(2, 3, 1)], [(3, 1, 2)], [(1, 2, 3)], [(2, 1, 3)],
    [(1, 3, 2), (2, 3, 1)], [(2, 3, 1), (4, 3, 1, 2)], [(1, 3, 2), (3, 4, 2, 1)],
    [(3, 1, 2), (2, 4, 3, 1)], [(2, 4, 1, 3)], [(3, 4, 1, 2), (2, 1, 4, 3)],
    [(1, 2)], [(1,)],
]


class TestEnumerate:
    @pytest.mark.parametrize("pats", PATTERN_SETS, ids=lambda p: pattern_key(p) or "none")
    def test_against_oracle(self, pats):
        for n in (1, 3, 5, 7):
            assert list(enumerate_class(n, pats)) == oracles.cls(n, pats)

    def test_small_examples(self):
        assert list(enumerate_class(3)) == [(2, 1, 3)]
        assert list(enumerate_class(5, [(1, 3, 2), (2, 3, 1)])) == [(3, 2, 1, 4, 5),
                                                                    (4, 2, 1, 3, 5)]
        assert list(enumerate_class(1, [(2, 1)])) == [(1,)]

    def test_unrestricted_counts(self):
        assert [count_class(n) for n in (1, 3, 5, 7, 9)] == [1, 1, 5, 56, 1092]

    def test_members_are_well_formed(self):
        for p in enumerate_class(9):
            assert p[-1] == 9 and check_partition(p)

    def test_monotone_in_patterns(self):
        for n in (5, 7, 9):
            base = count_class(n, [(1, 3, 2)])
            assert count_class(n, [(1, 3, 2), (4, 3, 1, 2)]) <= base <= count_class(n)

    def test_even_and_limits(self):
        with pytest.raises(InvalidInput):
            list(enumerate_class(4))
        with pytest.raises(ResourceLimit):
            list(enumerate_class(15))


class TestTheorems:
    def test_registry_at_n9(self):
        for t in THEOREMS.values():
            assert count_class(9, t.patterns) == t.formula(4), t.name

    def test_lookup(self):
        assert theorem_for([(4, 3, 1, 2), (2, 3, 1)]).name == "thm7.1"
        assert theorem_for([(1, 2, 3)]) is None


class TestCountTable:
    def test_spec_rows(self):
        t = count_table(3, [[(3, 1, 2), (2, 4, 3, 1)], [(1, 3, 2), (4, 3, 1, 2)],
                            [(2, 3, 1), (1, 4, 3, 2)]], compare=("formula", "bijection"))
        t.assert_consistent()
        enumerated = {}
        for r in t.rows:
            if r.provenance == "enumerated":
                enumerated.setdefault(r.patterns, []).append(r.count)
        assert enumerated == {"312,2431": [1, 1, 3, 12], "132,4312": [1, 1, 3, 10],
                              "231,1432": [1, 1, 3, 11]}
        assert {r.provenance for r in t.rows} == {"enumerated", "formula", "bijection-image"}

    def test_conflict_detected(self):
        t = CountTable()
        t.add(1, "132", 1, "enumerated")
        t.add(1, "132", 2, "formula")
        with pytest.raises(InvariantError):
            t.assert_consistent()
        with pytest.raises(InvalidInput):
            t.add(1, "132", 2, "guess")

    def test_serialization(self):
        t = count_table(2, [[(1, 3, 2), (2, 3, 1)]])
        assert t.to_csv().splitlines()[0] == ",".join(CSV_COLUMNS)
        assert CountTable.from_records(json.loads(t.to_json())).rows == t.rows
        assert CountTable().to_json() == "[]"
        assert CountTable().to_csv() == ",".join(CSV_COLUMNS) + "\n"


class TestCrossCheck:
    def test_all_rows_pass(self):
        report = cross_check(3)
        assert report["ok"] and report["version"] == 1
        kinds = {r["check"] for r in report["rows"]}
        assert kinds == {"count", "bijection", "inversion", "equal-count"}
        names = {r["theorem"] for r in report["rows"]}
        assert names >= set(THEOREMS) | {"thm4.2", "thm7.1"}
        json.dumps(report)
