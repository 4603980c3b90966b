"""Inversion between the two almost-vee classes, the modsvee split, and the
decomposition of nice members of U(231, 4312)."""

from __future__ import annotations

from typing import Sequence

from ..chc import build_chc, hook_from, is_nice, is_uniquely_sorted
from ..errors import InvariantError, PreconditionError
from ..perm import Perm, _std, as_perm, avoids, inverse

P132 = (1, 3, 2)
P231 = (2, 3, 1)
P312 = (3, 1, 2)
P3421 = (3, 4, 2, 1)
P4312 = (4, 3, 1, 2)


def in_class(p: Sequence[int], *patterns: Sequence[int]) -> bool:
    return is_uniquely_sorted(p) and avoids(p, *patterns)


def modvee_modsvee(p: Sequence[int]) -> Perm:
    """pi -> pi^{-1}, swapping U(132, 3421) and U(132, 4312)."""
    p = as_perm(p)
    if not (in_class(p, P132, P3421) or in_class(p, P132, P4312)):
        raise PreconditionError(f"{p} is in neither U(132,3421) nor U(132,4312)")
    return inverse(p)


def modsvee_split(p: Sequence[int]) -> tuple[int, Perm, Perm]:
    """Cut at the point hooked to (1, pi_1): a nice prefix of size 2j+1 and a svee suffix.

    The two pieces share the cut point, so their sizes add to n + 1.
    """
    p = as_perm(p)
    if not in_class(p, P132, P4312):
        raise PreconditionError(f"{p} is not in U(132,4312)")
    if len(p) == 1:
        return 0, p, p
    hook = hook_from(build_chc(p), 1)
    if hook is None:
        raise PreconditionError(f"{p} has no hook at its first point")
    m = hook.ne[0]
    return (m - 1) // 2, _std(p[:m]), _std(p[m - 1:])


def modsvee_join(j: int, prefix: Sequence[int], suffix: Sequence[int]) -> Perm:
    """Inverse of modsvee_split."""
    prefix = as_perm(prefix)
    suffix = as_perm(suffix)
    if j == 0:
        return prefix
    if len(prefix) != 2 * j + 1:
        raise PreconditionError("prefix size must be 2j+1")
    s0 = suffix[0]
    # suffix points below its first point are new minima, the rest new maxima
    return (tuple(v + s0 - 1 for v in prefix)
            + tuple(v if v < s0 else v + 2 * j for v in suffix[1:]))


def _layers(seq: Sequence[int]) -> list[list[int]]:
    out: list[list[int]] = []
    for v in seq:
        if out and v < out[-1][-1]:
            out[-1].append(v)
        else:
            out.append([v])
    return out


def _layered_member(q: Sequence[int]) -> bool:
    return is_uniquely_sorted(q) and avoids(q, P231, P312)


def nice_decompose(p: Sequence[int], check_class: bool = True) -> tuple[Perm, Perm]:
    """Split a nice pi in U(231, 4312) into (pi'', tau') with tau' layered.

    Write pi = pi_1 lambda mu n where lambda holds the values below pi_1. The
    prefix tau of lambda is the longest one of odd length 2m+1 whose last
    entry opens a layer of size at least two and whose normalization is a
    uniquely sorted layered permutation; pi'' is pi_1 followed by the rest
    of lambda and mu, normalized. When mu is empty and all of lambda is
    already such a layered permutation, tau is all of lambda and pi'' = 1.

    With ``check_class=False`` only niceness is required; the cut is still
    well defined for nice permutations outside the class.
    """
    p = as_perm(p)
    n = len(p)
    if n < 3 or not is_uniquely_sorted(p) or not is_nice(p):
        raise PreconditionError(f"{p} is not a nice uniquely sorted permutation with k >= 1")
    if check_class and not avoids(p, P231, P4312):
        raise PreconditionError(f"{p} is not in U(231,4312)")
    a = p[0]
    lam = p[1:a]
    mu = p[a:n - 1]
    if not mu and _layered_member(_std(lam)):
        return (1,), _std(lam)
    firsts = set()
    pos = 0
    for layer in _layers(lam):
        if len(layer) >= 2:
            firsts.add(pos)
        pos += len(layer)
    best = None
    for m in range((len(lam) - 1) // 2 + 1):
        if 2 * m in firsts and _layered_member(_std(lam[:2 * m + 1])):
            best = m
    if best is None:
        raise InvariantError(f"no layered prefix found for {p}")
    tau = lam[:2 * best + 1]
    sigma = lam[2 * best + 1:]
    return _std((a,) + sigma + mu), _std(tau)


def nice_recompose(pp: Sequence[int], tp: Sequence[int]) -> Perm:
    """Inverse of nice_decompose: slide tau' under pi''_1, merging its last
    entry into the first layer below pi''_1, and append a new maximum."""
    pp = as_perm(pp)
    tp = as_perm(tp)
    t = len(tp)
    if len(pp) == 1:
        return (t + 1,) + tp + (t + 2,)
    a = pp[0]
    sigma = pp[1:a]
    mu = pp[a:]
    if not sigma:
        raise PreconditionError(f"{pp} has nothing below its first entry")
    f = len(_layers(sigma)[0])
    lam = tp[:-1] + tuple(range(t + f, t - 1, -1)) + tuple(v + t for v in sigma[f:])
    total = len(lam) + len(mu) + 2
    return (len(lam) + 1,) + lam + tuple(v + t for v in mu) + (total,)
