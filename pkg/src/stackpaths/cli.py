"""Command-line entry point: ``stackpaths <command> ...``.

Exit codes: 0 success, 1 a check failed, 2 invalid input, 3 resource limit.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys

from . import __version__
from .bijections import (INVERSION, MAPS, classify, get_map, modsvee_split, modvee_modsvee,
                         nice_decompose)
from .chc import build_chc, is_uniquely_sorted
from .config import limits
from .enumeration import count_table, cross_check, enumerate_class, pattern_key, theorem_for
from .errors import InvalidInput, StackPathsError
from .paths import FORMULAS, Family, count_family, generate_all, make_path, parse_steps, validate
from .perm import descents, format_perm, parse_patterns, parse_perm
from .render import (format_hook, hooks_to_list, path_record, perm_record, render_path,
                     render_permutation, serialize)
from .series import DEFAULT_TERMS, SERIES
from .stacksort import fertility, preimages, stack_sort


def _emit(obj) -> None:
    print(json.dumps(obj, separators=(",", ":")))


def cmd_sort(a) -> int:
    p = parse_perm(a.perm)
    out = stack_sort(p)
    if a.json:
        _emit({"perm": list(p), "sorted": list(out)})
    else:
        print(format_perm(out))
    return 0


def cmd_fertility(a) -> int:
    p = parse_perm(a.perm)
    if a.list:
        pre = preimages(p, jobs=a.jobs)
        if a.json:
            _emit({"perm": list(p), "fertility": len(pre), "preimages": [list(q) for q in pre]})
        else:
            print(len(pre))
            for q in pre:
                print(format_perm(q))
        return 0
    f = fertility(p, jobs=a.jobs)
    if a.json:
        _emit({"perm": list(p), "fertility": f})
    else:
        print(f)
    return 0


def cmd_chc(a) -> int:
    p = parse_perm(a.perm)
    chc = build_chc(p)
    if a.json:
        _emit({"perm": list(p), "hooks": None if chc is None else hooks_to_list(chc)})
        return 0
    if chc is None:
        print("no canonical hook configuration")
        return 0
    if a.render:
        sys.stdout.write(render_permutation(p, chc))
    else:
        for h in chc:
            print(format_hook(h))
    return 0


def cmd_check(a) -> int:
    p = parse_perm(a.perm)
    rec = perm_record(p)
    if a.json:
        _emit(rec)
        return 0
    n = len(p)
    need = "-" if n % 2 == 0 else str((n - 1) // 2)
    print(f"uniquely sorted: {'yes' if rec['uniquely_sorted'] else 'no'}")
    print(f"length: {n}{' (even)' if n % 2 == 0 else ''}")
    print(f"descents: {len(rec['descents'])} (need {need})")
    print(f"chc: {'found' if 'hooks' in rec else 'none'}")
    return 0


def cmd_classify(a) -> int:
    p = parse_perm(a.perm)
    tags = sorted(s.value for s in classify(p))
    if a.json:
        _emit({"perm": list(p), "shapes": tags,
               "uniquely_sorted": is_uniquely_sorted(p)})
    else:
        print(" ".join(tags) if tags else "(none)")
    return 0


def cmd_map(a) -> int:
    p = parse_perm(a.perm)
    if a.via == INVERSION[0]:
        q = modvee_modsvee(p)
        _emit({"perm": list(p), "image": list(q)}) if a.json else print(format_perm(q))
        return 0
    path = get_map(a.via).forward(p)
    _emit(path_record(path)) if a.json else print(path.steps)
    return 0


def cmd_unmap(a) -> int:
    if a.via == INVERSION[0]:
        q = modvee_modsvee(parse_perm(a.path))
    else:
        q = get_map(a.via).backward(parse_steps(a.path))
    _emit(perm_record(q)) if a.json else print(format_perm(q))
    return 0


def cmd_decompose(a) -> int:
    p = parse_perm(a.perm)
    if a.via == "thm4.1":
        j, pre, suf = modsvee_split(p)
        if a.json:
            _emit({"j": j, "prefix": list(pre), "suffix": list(suf)})
        else:
            print(f"j: {j}\nprefix: {format_perm(pre)}\nsuffix: {format_perm(suf)}")
    else:
        pp, tp = nice_decompose(p)
        if a.json:
            _emit({"rest": list(pp), "layered": list(tp)})
        else:
            print(f"rest: {format_perm(pp)}\nlayered: {format_perm(tp)}")
    return 0


def _patterns(text: str | None):
    return parse_patterns(text) if text else []


def cmd_enumerate(a) -> int:
    pats = _patterns(a.avoid)
    perms = list(enumerate_class(a.n, pats, jobs=a.jobs))
    fmt = "json" if a.json else a.format
    if fmt == "json":
        _emit({"n": a.n, "patterns": pattern_key(pats), "count": len(perms),
               "perms": [list(q) for q in perms]})
    else:
        text = serialize(perms, fmt)
        sys.stdout.write(text if text.endswith("\n") or not text else text + "\n")
    return 0


def cmd_count(a) -> int:
    pats = _patterns(a.avoid)
    compare = a.compare or ["formula"]
    table = count_table(a.kmax, [pats], compare=compare, jobs=a.jobs)
    fmt = "json" if a.json else a.format
    text = serialize(table, fmt)
    sys.stdout.write(text if text.endswith("\n") else text + "\n")
    bad = table.conflicts()
    if bad:
        print(f"mismatch at {len(bad)} key(s)", file=sys.stderr)
        return 1
    if "formula" in compare and theorem_for(pats) is None:
        print("note: no closed form is registered for this pattern set", file=sys.stderr)
    return 0


def cmd_crosscheck(a) -> int:
    report = cross_check(a.kmax, slow=a.slow, jobs=a.jobs)
    if a.json:
        _emit(report)
    else:
        for r in report["rows"]:
            status = "ok  " if r["ok"] else "FAIL"
            if r["check"] == "bijection":
                detail = (f"{r['enumerated']} members, {r['images']} images, "
                          f"{r['family_count']} {r['family']} paths")
            else:
                detail = f"{r['enumerated']} vs {r['expected']}"
            print(f"{status} {r['check']:<11} {r['theorem']:<9} k={r['k']} "
                  f"{r['patterns']:<18} {detail}")
        print("all checks passed" if report["ok"] else "SOME CHECKS FAILED")
    return 0 if report["ok"] else 1


def cmd_series(a) -> int:
    s = SERIES[a.name](a.terms)
    if a.json:
        _emit({"name": a.name, "terms": a.terms, "coefficients": list(s.coeffs)})
    else:
        print(" ".join(str(c) for c in s.coeffs))
    return 0


def cmd_paths(a) -> int:
    fam = Family.parse(a.family)
    if a.action == "generate":
        paths = list(generate_all(fam, a.k))
        if a.json:
            _emit([path_record(p) for p in paths])
        else:
            for p in paths:
                print(p.steps or "(empty)")
        return 0
    if a.action == "count":
        n = count_family(fam, a.k)
        rec = {"family": fam.value, "k": a.k, "count": n}
        ok = True
        if a.formula:
            if fam not in FORMULAS:
                raise InvalidInput(f"no closed form for {fam.value}")
            rec["formula"] = FORMULAS[fam](a.k)
            ok = rec["formula"] == n
        if a.json:
            _emit(rec)
        else:
            print(n if not a.formula else f"{n} (formula {rec['formula']})")
        return 0 if ok else 1
    # validate
    steps = parse_steps(a.steps or "")
    ok = validate(steps, fam)
    if a.json:
        _emit({"family": fam.value, "steps": steps, "valid": ok})
    else:
        print("valid" if ok else "invalid")
    return 0 if ok else 1


def cmd_render(a) -> int:
    text = a.object.strip()
    if text and set(text.upper()) <= set("UDEH"):
        fam = Family.parse(a.family) if a.family else None
        sys.stdout.write(render_path(text.upper(), fam))
        return 0
    p = parse_perm(text)
    sys.stdout.write(render_permutation(p, None if a.no_hooks else build_chc(p)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS,
                        help="worker count for exhaustive sweeps")
    common.add_argument("--limit", type=int, default=argparse.SUPPRESS,
                        help="raise or lower every brute-force size limit")
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")

    ap = argparse.ArgumentParser(prog="stackpaths", parents=[common],
                                 description="Stack-sorting, uniquely sorted permutations "
                                             "and lattice-path bijections.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=func)
        return sp

    add("sort", cmd_sort, "apply the stack-sorting map").add_argument("perm")
    sp = add("fertility", cmd_fertility, "count (or list) preimages under s")
    sp.add_argument("perm")
    sp.add_argument("--list", action="store_true", help="also print the preimages")
    sp = add("chc", cmd_chc, "canonical hook configuration")
    sp.add_argument("perm")
    sp.add_argument("--render", action="store_true", help="draw the plot with hooks")
    add("check", cmd_check, "uniquely sorted verdict with witnesses").add_argument("perm")
    add("classify", cmd_classify, "list the shape classes of a permutation").add_argument("perm")

    vias = list(MAPS) + [INVERSION[0]]
    sp = add("map", cmd_map, "send a class member to its path")
    sp.add_argument("perm")
    sp.add_argument("--via", required=True, choices=vias)
    sp = add("unmap", cmd_unmap, "recover the permutation from a path")
    sp.add_argument("path")
    sp.add_argument("--via", required=True, choices=vias)
    sp = add("decompose", cmd_decompose, "split a class member into smaller pieces")
    sp.add_argument("perm")
    sp.add_argument("--via", required=True, choices=["thm4.1", "thm7.1"])

    sp = add("enumerate", cmd_enumerate, "list a uniquely sorted pattern class")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--avoid", default="", help="comma-separated patterns, e.g. 132,4312")
    sp.add_argument("--format", choices=["lines", "json", "csv"], default="lines")
    sp = add("count", cmd_count, "class sizes for k = 0..kmax")
    sp.add_argument("--kmax", type=int, required=True)
    sp.add_argument("--avoid", default="")
    sp.add_argument("--compare", action="append", choices=["formula", "bijection"])
    sp.add_argument("--format", choices=["lines", "json", "csv"], default="csv")
    sp = add("crosscheck", cmd_crosscheck, "verify every enumeration theorem")
    sp.add_argument("--kmax", type=int, default=4)
    sp.add_argument("--slow", action="store_true", help="extend to k = 5")

    sp = add("series", cmd_series, "generating-function coefficients")
    sp.add_argument("--name", required=True, choices=sorted(SERIES))
    sp.add_argument("--terms", type=int, default=DEFAULT_TERMS)

    sp = add("paths", cmd_paths, "generate, count or validate lattice paths")
    sp.add_argument("action", choices=["generate", "count", "validate"])
    sp.add_argument("steps", nargs="?", help="path to validate")
    sp.add_argument("--family", required=True, choices=[f.value for f in Family])
    sp.add_argument("--k", type=int, default=0)
    sp.add_argument("--formula", action="store_true", help="compare with the closed form")

    sp = add("render", cmd_render, "ASCII drawing of a permutation or path")
    sp.add_argument("object", help="a permutation or a step string")
    sp.add_argument("--family", choices=[f.value for f in Family])
    sp.add_argument("--no-hooks", action="store_true")
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    args.json = getattr(args, "json", False)
    args.jobs = getattr(args, "jobs", None)
    saved = dataclasses.replace(limits)
    if getattr(args, "limit", None) is not None:
        for name in ("fertility", "histogram", "enumeration", "paths"):
            setattr(limits, name, args.limit)
    try:
        return args.func(args)
    except StackPathsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    finally:
        # main() may be called in-process; leave the module limits as found
        for f in dataclasses.fields(limits):
            setattr(limits, f.name, getattr(saved, f.name))


if __name__ == "__main__":
    sys.exit(main())
