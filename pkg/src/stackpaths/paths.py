"""Lattice paths over U (+1,+1), D (+1,-1), E (+1,0) and H (+2,0).

Size parameters: semilength k for Dyck and both Schroeder families (x-width
2k, with H counting 2), number of steps for Motzkin, and k for S-Motzkin
paths (3k steps: k each of E, U, D).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import comb
from typing import Iterator

from .config import check_limit, limits
from .errors import InvalidInput, InvariantError

STEP_ORDER = "UDEH"
RISE = {"U": 1, "D": -1, "E": 0, "H": 0}
WIDTH = {"U": 1, "D": 1, "E": 1, "H": 2}


class Family(str, enum.Enum):
    DYCK = "dyck"
    MOTZKIN = "motzkin"
    SMOTZKIN = "smotzkin"
    SCHROEDER = "schroeder"
    LITTLE_SCHROEDER = "littleschroeder"

    @classmethod
    def parse(cls, name: "str | Family") -> "Family":
        if isinstance(name, Family):
            return name
        key = name.strip().lower().replace("-", "").replace("_", "").replace("ö", "oe")
        for f in cls:
            if f.value == key:
                return f
        raise InvalidInput(f"unknown path family {name!r}")


ALPHABET = {
    Family.DYCK: "UD",
    Family.MOTZKIN: "UDE",
    Family.SMOTZKIN: "UDE",
    Family.SCHROEDER: "UDH",
    Family.LITTLE_SCHROEDER: "UDH",
}


def parse_steps(text: str) -> str:
    s = "".join(text.split()).upper()
    if s in ("", "Ε"):
        return ""
    bad = set(s) - set(STEP_ORDER)
    if bad:
        raise InvalidInput(f"unknown step character(s) {''.join(sorted(bad))!r} in {text!r}")
    return s


def heights(steps: str) -> list[int]:
    """Height after each step, starting with the initial 0."""
    h = [0]
    for c in steps:
        h.append(h[-1] + RISE[c])
    return h


def size_of(steps: str, family: Family) -> int:
    family = Family.parse(family)
    if family is Family.MOTZKIN:
        return len(steps)
    if family is Family.SMOTZKIN:
        return steps.count("E")
    return sum(WIDTH[c] for c in steps) // 2


def _ballot(steps: str) -> bool:
    # every prefix has at least as many U's as D's, and equal totals
    u = d = 0
    for c in steps:
        if c == "U":
            u += 1
        elif c == "D":
            d += 1
            if d > u:
                return False
    return u == d


def validate(steps: str, family: "Family | str") -> bool:
    family = Family.parse(family)
    steps = parse_steps(steps)
    if set(steps) - set(ALPHABET[family]):
        return False
    h = heights(steps)
    if min(h) < 0 or h[-1] != 0:
        return False
    if family is Family.LITTLE_SCHROEDER:
        if any(c == "H" and h[i] == 0 for i, c in enumerate(steps)):
            return False
    if family is Family.SMOTZKIN:
        return _smotzkin_rules(steps)
    return True


def _smotzkin_rules(steps: str) -> bool:
    k = steps.count("E")
    if steps.count("U") != k or steps.count("D") != k:
        return False
    if k == 0:
        return True
    if steps[0] != "E":
        return False
    e_at = [i for i, c in enumerate(steps) if c == "E"]
    for a, b in zip(e_at, e_at[1:]):
        if steps[a + 1:b].count("U") != 1:
            return False
    u = e = d = 0
    for c in steps:
        if c == "U":
            u += 1
        elif c == "E":
            e += 1
        else:
            d += 1
            if u < d or e < d:
                return False
    return True


@dataclass(frozen=True)
class LatticePath:
    steps: str
    family: Family

    def __post_init__(self):
        object.__setattr__(self, "steps", parse_steps(self.steps))
        object.__setattr__(self, "family", Family.parse(self.family))

    @property
    def k(self) -> int:
        return size_of(self.steps, self.family)

    @property
    def width(self) -> int:
        return sum(WIDTH[c] for c in self.steps)

    def is_valid(self) -> bool:
        return validate(self.steps, self.family)

    def __str__(self) -> str:
        return self.steps


def make_path(steps: str, family: "Family | str") -> LatticePath:
    """Build a path, raising InvalidInput unless it is valid for the family."""
    p = LatticePath(steps, Family.parse(family))
    if not p.is_valid():
        raise InvalidInput(f"{p.steps!r} is not a valid {p.family.value} path")
    return p


def generate_all(family: "Family | str", size: int) -> Iterator[LatticePath]:
    """Every valid path of the given size, in lexicographic order under U < D < E < H."""
    family = Family.parse(family)
    if size < 0:
        raise InvalidInput("size must be nonnegative")
    check_limit(f"{family.value} path generation", size, limits.paths)
    alphabet = [c for c in STEP_ORDER if c in ALPHABET[family]]
    if family is Family.SMOTZKIN:
        yield from (LatticePath(s, family) for s in _gen_smotzkin(size))
        return
    # total x-width to cover
    width = size if family is Family.MOTZKIN else 2 * size
    little = family is Family.LITTLE_SCHROEDER
    buf: list[str] = []

    def rec(x: int, h: int) -> Iterator[str]:
        if x == width:
            if h == 0:
                yield "".join(buf)
            return
        for c in alphabet:
            w = WIDTH[c]
            nh = h + RISE[c]
            if x + w > width or nh < 0 or nh > width - x - w:
                continue
            if c == "H" and little and h == 0:
                continue
            buf.append(c)
            yield from rec(x + w, nh)
            buf.pop()

    for s in rec(0, 0):
        yield LatticePath(s, family)


def _gen_smotzkin(k: int) -> Iterator[str]:
    buf: list[str] = []

    def rec(u: int, d: int, e: int) -> Iterator[str]:
        if d == k:
            yield "".join(buf)
            return
        # U < D < E
        if u < e and u < k:
            buf.append("U")
            yield from rec(u + 1, d, e)
            buf.pop()
        if d < u and d < e:
            buf.append("D")
            yield from rec(u, d + 1, e)
            buf.pop()
        if e < k and u == e:
            buf.append("E")
            yield from rec(u, d, e + 1)
            buf.pop()

    yield from rec(0, 0, 0)


def count_family(family: "Family | str", size: int) -> int:
    return sum(1 for _ in generate_all(family, size))


def _exact_div(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise InvariantError(f"{a} is not divisible by {b}")
    return q


def catalan(k: int) -> int:
    return _exact_div(comb(2 * k, k), k + 1)


def three_catalan(k: int) -> int:
    return _exact_div(comb(3 * k, k), 2 * k + 1)


def central_binom_minus(k: int) -> int:
    """C(2k-1, k), taking the value 1 at k = 0 (the class {1})."""
    if k == 0:
        return 1
    return comb(2 * k - 1, k)


def schroeder(k: int) -> int:
    return sum(comb(k + j, k - j) * catalan(j) for j in range(k + 1))


def little_schroeder(k: int) -> int:
    if k == 0:
        return 1
    return _exact_div(schroeder(k), 2)


FORMULAS = {
    Family.DYCK: catalan,
    Family.SMOTZKIN: three_catalan,
    Family.SCHROEDER: schroeder,
    Family.LITTLE_SCHROEDER: little_schroeder,
}
