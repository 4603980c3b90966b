from itertools import permutations

import pytest

import oracles
from stackpaths.bijections import (INVERSION, MAPS, ShapeClass, classify, from_dyck,
                                   from_schroeder, from_smotzkin, get_map, has_shape,
                                   stair_blocks, to_dyck, to_schroeder, to_smotzkin)
from stackpaths.bijections.shapes import (is_layered, is_modsvee, is_modvee, is_svee, is_vee,
                                          layered_from_word, svee_from_word)
from stackpaths.enumeration import enumerate_class
from stackpaths.errors import InvalidInput, PreconditionError
from stackpaths.paths import generate_all
from stackpaths.perm import inverse

VEE11 = (10, 6, 5, 3, 2, 1, 4, 7, 8, 9, 11)
STAIR_SVEE13 = (3, 2, 4, 1, 9, 8, 7, 10, 11, 6, 5, 12, 13)
STAIR_LAYERED13 = (3, 2, 4, 1, 8, 7, 6, 9, 11, 10, 5, 12, 13)
SVEE_INC11 = (4, 3, 2, 5, 7, 6, 1, 9, 10, 8, 11)
VEE_LAYERED11 = (9, 2, 1, 5, 4, 3, 6, 8, 7, 10, 11)
VEE_STEP9 = (7, 3, 2, 1, 5, 4, 6, 8, 9)

GOLDEN = [
    ("lemma3.1", VEE11, "UDUUUDDUDD"),
    ("thm5.3", STAIR_SVEE13, "EUDEUEDUEUDDEUEUDD"),
    ("thm5.4", STAIR_LAYERED13, "EUDEUEDUEUDDEUEUDD"),
    ("thm5.5", SVEE_INC11, "EUEUDEDUEUEDDUD"),
    ("thm5.6", VEE_LAYERED11, "EUEUDEDUEUEDDUD"),
    ("thm6.1", VEE_STEP9, "UUHDUDD"),
]


@pytest.fixture(scope="module")
def sorted_perms():
    return {n: oracles.uniquely_sorted_by_fertility(n) for n in (1, 3, 5, 7)}


class TestShapes:
    def test_example_shapes(self):
        assert has_shape(VEE11, "vee")
        assert has_shape((6, 4, 3, 5, 2, 7, 8, 1, 9), "modsvee")
        assert has_shape(VEE_STEP9, "vee-step")
        assert has_shape(STAIR_SVEE13, ShapeClass.STAIR_SVEE)
        assert has_shape(STAIR_LAYERED13, ShapeClass.STAIR_LAYERED)
        assert has_shape(SVEE_INC11, ShapeClass.SVEE_INCREASING)
        assert has_shape(VEE_LAYERED11, ShapeClass.VEE_LAYERED)

    def test_basic_shapes_are_pattern_classes(self):
        checks = [(is_vee, [(1, 3, 2), (2, 3, 1)]), (is_svee, [(1, 3, 2), (3, 1, 2)]),
                  (is_layered, [(2, 3, 1), (3, 1, 2)])]
        for n in range(9):
            for p in permutations(range(1, n + 1)):
                for test, pats in checks:
                    assert test(p) == (not any(oracles.contains(p, t) for t in pats)), p

    def test_shape_equals_class_within_sorted(self, sorted_perms):
        for m in MAPS.values():
            for n, perms in sorted_perms.items():
                cls = [p for p in perms if not any(oracles.contains(p, t) for t in m.patterns)]
                assert cls == [p for p in perms if has_shape(p, m.shape)], (m.name, n)

    def test_mod_shapes(self, sorted_perms):
        for perms in sorted_perms.values():
            a = {p for p in perms if is_modsvee(p)}
            b = {p for p in perms if is_modvee(p)}
            assert a == {p for p in perms if not oracles.contains(p, (1, 3, 2))
                         and not oracles.contains(p, (4, 3, 1, 2))}
            assert b == {inverse(p) for p in a}

    def test_mod_shapes_n9(self):
        perms = list(enumerate_class(9))
        a = {p for p in perms if is_modsvee(p)}
        assert a == set(enumerate_class(9, [(1, 3, 2), (4, 3, 1, 2)]))
        assert {p for p in perms if is_modvee(p)} == set(enumerate_class(9, [(1, 3, 2),
                                                                             (3, 4, 2, 1)]))

    def test_classify(self):
        assert ShapeClass.VEE in classify(VEE11)
        assert classify((2, 1, 3)) >= {ShapeClass.VEE, ShapeClass.SVEE, ShapeClass.LAYERED}

    def test_stair_blocks(self):
        d = stair_blocks(STAIR_LAYERED13, "stair-layered")
        assert d.blocks[-1].kind == "tail"
        assert [b.end - b.start + 1 for b in d.blocks] == [4, 7, 2]
        assert d.tail == 2
        with pytest.raises(PreconditionError):
            stair_blocks(VEE11, "stair-layered")

    def test_word_constructors(self):
        assert svee_from_word("") == (1,)
        assert is_svee(svee_from_word("ABBA"))
        assert is_layered(layered_from_word("ABAB"))


class TestGolden:
    @pytest.mark.parametrize("name,perm,steps", GOLDEN)
    def test_forward_and_back(self, name, perm, steps):
        m = MAPS[name]
        assert m.forward(perm).steps == steps
        assert m.backward(steps) == perm

    def test_inversion_examples(self):
        assert inverse((6, 4, 3, 5, 2, 7, 8, 1, 9)) == (8, 5, 3, 2, 4, 1, 6, 7, 9)


class TestExhaustive:
    @pytest.mark.parametrize("name", list(MAPS))
    def test_bijective(self, name, sorted_perms):
        m = MAPS[name]
        for n, perms in sorted_perms.items():
            k = (n - 1) // 2
            cls = [p for p in perms if not any(oracles.contains(p, t) for t in m.patterns)]
            images = []
            for p in cls:
                path = m.forward(p)
                assert path.is_valid() and path.k == k and path.family == m.family
                assert m.backward(path) == p
                images.append(path.steps)
            family = sorted(q.steps for q in generate_all(m.family, k))
            assert sorted(images) == family, (name, n)

    @pytest.mark.parametrize("name", list(MAPS))
    def test_backward_then_forward(self, name):
        m = MAPS[name]
        for k in range(5):
            for path in generate_all(m.family, k):
                p = m.backward(path)
                assert len(p) == 2 * k + 1
                assert m.forward(p) == path

    def test_inversion(self, sorted_perms):
        _, src, dst = INVERSION
        for perms in sorted_perms.values():
            a = {p for p in perms if not any(oracles.contains(p, t) for t in src)}
            b = {p for p in perms if not any(oracles.contains(p, t) for t in dst)}
            assert {inverse(p) for p in a} == b


class TestErrors:
    def test_wrong_class(self):
        with pytest.raises(PreconditionError):
            to_dyck((1, 2, 3), "vee")
        with pytest.raises(PreconditionError):
            to_dyck((2, 3, 1), "vee")
        with pytest.raises(PreconditionError):
            to_smotzkin(VEE11, "stair-svee")
        with pytest.raises(PreconditionError):
            to_schroeder(STAIR_SVEE13)

    def test_wrong_family(self):
        with pytest.raises(PreconditionError):
            from_dyck("UUD", "vee")
        with pytest.raises(PreconditionError):
            from_smotzkin("UDUD", "stair-svee")
        with pytest.raises(PreconditionError):
            from_schroeder("HUD")
        with pytest.raises(InvalidInput):
            from_dyck("UXD", "vee")

    def test_get_map(self):
        assert get_map("THM6.1").family.value == "littleschroeder"
        with pytest.raises(InvalidInput):
            get_map("thm9.9")
