"""Plain-ASCII rendering and text serialization (format version 1)."""

from __future__ import annotations

import csv
import io
import json
from typing import Sequence

from .chc import CHC, Hook, build_chc, is_uniquely_sorted
from .enumeration import CountTable
from .errors import InvalidInput
from .paths import Family, LatticePath, RISE, WIDTH, make_path
from .perm import Perm, as_perm, descents, format_perm

FORMAT_VERSION = 1
FORMATS = ("json", "csv", "lines")


def render_permutation(p: Sequence[int], chc: CHC | None = None) -> str:
    """Plot with value labels on the left; 'o' marks points, hooks use | - +."""
    p = as_perm(p)
    n = len(p)
    if n == 0:
        return ""
    w = len(str(n)) + 1
    width = n * w
    grid = [[" "] * width for _ in range(n)]

    def cell(i: int, v: int) -> tuple[int, int]:
        return n - v, i * w - 1

    def put(r: int, c: int, ch: str) -> None:
        old = grid[r][c]
        if old == "o":
            return
        if {old, ch} == {"|", "-"} or (old in "|-+" and ch == "+"):
            ch = "+"
        grid[r][c] = ch

    for h in chc or ():
        (i, v), (j, u) = h
        _, c0 = cell(i, v)
        _, c1 = cell(j, u)
        r_top, _ = cell(i, u)
        for r in range(r_top + 1, n - v):
            put(r, c0, "|")
        put(r_top, c0, "+")
        for c in range(c0 + 1, c1):
            put(r_top, c, "-")
    for i, v in enumerate(p, start=1):
        r, c = cell(i, v)
        grid[r][c] = "o"
    lw = len(str(n))
    lines = [f"{n - r:>{lw}} " + "".join(row).rstrip() for r, row in enumerate(grid)]
    axis = " " * (lw + 1) + "".join(f"{i:>{w}}" for i in range(1, n + 1))[1:]
    return "\n".join(lines + [axis]) + "\n"


def render_path(path: LatticePath | str, family: Family | str | None = None) -> str:
    """One column per unit of width: '/' up, '\\' down, '_' flat (H spans two)."""
    if isinstance(path, LatticePath):
        lp = path
    else:
        lp = LatticePath(path, Family.parse(family or _guess_family(path)))
    if not lp.is_valid():
        raise InvalidInput(f"{lp.steps!r} is not a valid {lp.family.value} path")
    marks: list[tuple[int, int, str]] = []   # (row level, column, char)
    x = h = 0
    for c in lp.steps:
        if c == "U":
            marks.append((h, x, "/"))
        elif c == "D":
            marks.append((h - 1, x, "\\"))
        else:
            for dx in range(WIDTH[c]):
                marks.append((h, x + dx, "_"))
        x += WIDTH[c]
        h += RISE[c]
    if not marks:
        return ""
    top = max(m[0] for m in marks)
    rows = [[" "] * x for _ in range(top + 1)]
    for level, col, ch in marks:
        rows[top - level][col] = ch
    return "\n".join("".join(r).rstrip() for r in rows) + "\n"


def _guess_family(steps: str) -> Family:
    s = set(steps.upper())
    if "H" in s:
        return Family.SCHROEDER
    if "E" in s:
        return Family.MOTZKIN
    return Family.DYCK


# serialization

def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def hooks_to_list(chc: CHC) -> list:
    return [[list(h.sw), list(h.ne)] for h in chc]


def perm_record(p: Sequence[int], hooks: bool = True) -> dict:
    p = as_perm(p)
    rec = {"n": len(p), "perm": list(p), "descents": descents(p),
           "uniquely_sorted": is_uniquely_sorted(p)}
    if hooks:
        chc = build_chc(p)
        if chc is not None:
            rec["hooks"] = hooks_to_list(chc)
    return rec


def path_record(path: LatticePath) -> dict:
    return {"family": path.family.value, "steps": path.steps, "k": path.k}


def format_hook(h: Hook) -> str:
    (i, v), (j, u) = h
    return f"({i},{v})-({j},{u})"


def serialize(obj, fmt: str = "json") -> str:
    """Text form of a permutation, CHC, path, count table or list of permutations."""
    if fmt not in FORMATS:
        raise InvalidInput(f"unknown format {fmt!r}")
    if isinstance(obj, LatticePath):
        if fmt == "json":
            return _dumps(path_record(obj))
        if fmt == "lines":
            return obj.steps
    elif isinstance(obj, CountTable):
        if fmt == "json":
            return _dumps(obj.to_records())
        if fmt == "csv":
            return obj.to_csv()
        return "\n".join(f"{r.k} {r.patterns} {r.count} {r.provenance}" for r in obj.rows)
    elif isinstance(obj, tuple) and obj and all(isinstance(h, Hook) for h in obj):
        if fmt == "json":
            return _dumps(hooks_to_list(obj))
        if fmt == "lines":
            return "\n".join(format_hook(h) for h in obj)
    elif isinstance(obj, tuple) and all(isinstance(v, int) for v in obj):
        if fmt == "json":
            return _dumps(perm_record(obj))
        if fmt == "lines":
            return format_perm(obj)
    elif isinstance(obj, list) and all(isinstance(q, tuple) for q in obj):
        if fmt == "json":
            return _dumps([list(q) for q in obj])
        if fmt == "lines":
            return "\n".join(format_perm(q) for q in obj)
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(("perm",))
        for q in obj:
            w.writerow((format_perm(q),))
        return buf.getvalue()
    raise InvalidInput(f"cannot serialize {type(obj).__name__} as {fmt}")


def perm_from_json(text: str) -> Perm:
    rec = json.loads(text)
    p = as_perm(rec["perm"])
    if rec.get("n", len(p)) != len(p):
        raise InvalidInput("length field disagrees with perm")
    return p


def path_from_json(text: str) -> LatticePath:
    rec = json.loads(text)
    path = make_path(rec["steps"], rec["family"])
    if "k" in rec and rec["k"] != path.k:
        raise InvalidInput("size field disagrees with steps")
    return path
