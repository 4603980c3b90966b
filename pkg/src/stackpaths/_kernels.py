"""Compiled sweep kernels over S_n.

Work units are fixed prefixes (the first one or two entries); each unit is an
independent sweep of the remaining entries in lexicographic order, so unit
order followed by in-unit order is global lexicographic order. Values are
1-based throughout, matching the pure-Python code they mirror.
"""

import warnings
from itertools import permutations

import numba
import numpy as np
from numba import njit, prange

# an old system TBB is probed and rejected on first launch; other layers work
warnings.filterwarnings("ignore", message="The TBB threading layer", category=numba.NumbaWarning)


def work_units(n: int, depth: int = 2) -> np.ndarray:
    """All length-min(depth, n) prefixes of S_n, lexicographic, as an int64 array."""
    d = min(depth, n)
    rows = list(permutations(range(1, n + 1), d))
    out = np.zeros((len(rows), max(d, 1)), dtype=np.int64)
    for r, row in enumerate(rows):
        out[r, :d] = row
    return out


def set_threads(jobs: int) -> None:
    numba.set_num_threads(max(1, min(jobs, numba.config.NUMBA_NUM_THREADS)))


@njit(cache=True)
def _next_perm(a, lo):
    # lexicographic successor of a[lo:], in place; False when a[lo:] is last
    n = a.shape[0]
    i = n - 2
    while i >= lo and a[i] >= a[i + 1]:
        i -= 1
    if i < lo:
        return False
    j = n - 1
    while a[j] <= a[i]:
        j -= 1
    t = a[i]
    a[i] = a[j]
    a[j] = t
    lo2 = i + 1
    hi2 = n - 1
    while lo2 < hi2:
        t = a[lo2]
        a[lo2] = a[hi2]
        a[hi2] = t
        lo2 += 1
        hi2 -= 1
    return True


@njit(cache=True)
def _load_unit(a, used, prefix, plen, n):
    for v in range(n + 1):
        used[v] = False
    for i in range(plen):
        a[i] = prefix[i]
        used[prefix[i]] = True
    k = plen
    for v in range(1, n + 1):
        if not used[v]:
            a[k] = v
            k += 1


@njit(cache=True)
def stack_sort_into(a, out, stack):
    top = 0
    k = 0
    for x in a:
        while top > 0 and stack[top - 1] < x:
            top -= 1
            out[k] = stack[top]
            k += 1
        stack[top] = x
        top += 1
    while top > 0:
        top -= 1
        out[k] = stack[top]
        k += 1


@njit(cache=True)
def _sorts_to(a, target, stack):
    top = 0
    k = 0
    for x in a:
        while top > 0 and stack[top - 1] < x:
            top -= 1
            if stack[top] != target[k]:
                return False
            k += 1
        stack[top] = x
        top += 1
    while top > 0:
        top -= 1
        if stack[top] != target[k]:
            return False
        k += 1
    return True


@njit(cache=True)
def lex_rank(a, m, fact):
    # rank of a[:m] (a permutation of 1..m) among S_m in lexicographic order
    r = 0
    for i in range(m):
        c = 0
        for j in range(i + 1, m):
            if a[j] < a[i]:
                c += 1
        r += c * fact[m - 1 - i]
    return r


@njit(parallel=True, cache=True)
def image_histogram(n, units, plen, jobs, fact):
    """Counts of s-images, indexed by the lex rank of the image minus its final n."""
    size = fact[n - 1]
    hist = np.zeros((jobs, size), dtype=np.int32)
    nu = units.shape[0]
    for w in prange(jobs):
        a = np.empty(n, dtype=np.int64)
        out = np.empty(n, dtype=np.int64)
        stack = np.empty(n, dtype=np.int64)
        used = np.empty(n + 1, dtype=np.bool_)
        for u in range(w, nu, jobs):
            _load_unit(a, used, units[u], plen, n)
            while True:
                stack_sort_into(a, out, stack)
                hist[w, lex_rank(out, n - 1, fact)] += 1
                if not _next_perm(a, plen):
                    break
    total = np.zeros(size, dtype=np.int64)
    for w in range(jobs):
        for r in range(size):
            total[r] += hist[w, r]
    return total


@njit(parallel=True, cache=True)
def preimage_counts(target, units, plen):
    n = target.shape[0]
    nu = units.shape[0]
    counts = np.zeros(nu, dtype=np.int64)
    for u in prange(nu):
        a = np.empty(n, dtype=np.int64)
        stack = np.empty(n, dtype=np.int64)
        used = np.empty(n + 1, dtype=np.bool_)
        _load_unit(a, used, units[u], plen, n)
        c = 0
        while True:
            if _sorts_to(a, target, stack):
                c += 1
            if not _next_perm(a, plen):
                break
        counts[u] = c
    return counts


@njit(parallel=True, cache=True)
def preimage_fill(target, units, plen, offsets, out):
    n = target.shape[0]
    nu = units.shape[0]
    for u in prange(nu):
        a = np.empty(n, dtype=np.int64)
        stack = np.empty(n, dtype=np.int64)
        used = np.empty(n + 1, dtype=np.bool_)
        _load_unit(a, used, units[u], plen, n)
        k = offsets[u]
        while True:
            if _sorts_to(a, target, stack):
                for i in range(n):
                    out[k, i] = a[i]
                k += 1
            if not _next_perm(a, plen):
                break


@njit(cache=True)
def has_chc(p, n, desc, ne_pos, ne_val):
    """Existence of the canonical hook configuration (0-based positions)."""
    nd = 0
    for i in range(n - 1):
        if p[i] > p[i + 1]:
            desc[nd] = i
            nd += 1
    for t in range(nd - 1, -1, -1):
        i = desc[t]
        vi = p[i]
        found = -1
        for j in range(i + 1, n):
            if p[j] <= vi:
                continue
            ok = True
            for h in range(t + 1, nd):
                if desc[h] < j and j <= ne_pos[h] and p[j] <= ne_val[h]:
                    ok = False
                    break
            if ok:
                found = j
                break
        if found < 0:
            return False
        ne_pos[t] = found
        ne_val[t] = p[found]
    return True


@njit(cache=True)
def _ends_with_pattern(a, d, pat, L, idx):
    # does a[:d+1] contain an occurrence of pat whose last letter is a[d]?
    if L == 1:
        return True
    if d < L - 1:
        return False
    v = a[d]
    last = pat[L - 1]
    t = 0
    idx[0] = -1
    while t >= 0:
        idx[t] += 1
        if idx[t] > d - (L - 1 - t):
            t -= 1
            continue
        x = a[idx[t]]
        ok = (x < v) == (pat[t] < last)
        if ok:
            for s in range(t):
                if (a[idx[s]] < x) != (pat[s] < pat[t]):
                    ok = False
                    break
        if not ok:
            continue
        if t == L - 2:
            return True
        t += 1
        idx[t] = idx[t - 1]
    return False


@njit(cache=True)
def _accept(a, d, pats, plens, idx):
    for q in range(pats.shape[0]):
        if _ends_with_pattern(a, d, pats[q], plens[q], idx):
            return False
    return True


@njit(cache=True)
def _class_unit(n, prefix, plen, pats, plens, out, start, fill):
    """DFS over one unit; count (or write, when fill) uniquely sorted avoiders."""
    k = (n - 1) // 2
    a = np.empty(n, dtype=np.int64)
    used = np.zeros(n + 2, dtype=np.bool_)
    nxt = np.ones(n + 1, dtype=np.int64)
    ndesc = np.zeros(n + 1, dtype=np.int64)
    nasc = np.zeros(n + 1, dtype=np.int64)
    idx = np.empty(max(n, 1), dtype=np.int64)
    desc = np.empty(n, dtype=np.int64)
    ne_pos = np.empty(n, dtype=np.int64)
    ne_val = np.empty(n, dtype=np.int64)
    found = 0
    # replay the fixed prefix through the same pruning
    for d in range(plen):
        v = prefix[d]
        a[d] = v
        nd = ndesc[d]
        na = nasc[d]
        if d > 0:
            if a[d - 1] > v:
                nd += 1
            else:
                na += 1
        if nd > k or na > k or not _accept(a, d, pats, plens, idx):
            return 0
        used[v] = True
        ndesc[d + 1] = nd
        nasc[d + 1] = na
    if plen == n:
        if has_chc(a, n, desc, ne_pos, ne_val):
            if fill:
                for i in range(n):
                    out[start, i] = a[i]
            return 1
        return 0
    d = plen
    nxt[d] = 1
    while d >= plen:
        v = nxt[d]
        while v <= n and used[v]:
            v += 1
        if v > n:
            d -= 1
            if d >= plen:
                used[a[d]] = False
            continue
        nxt[d] = v + 1
        a[d] = v
        nd = ndesc[d]
        na = nasc[d]
        if d > 0:
            if a[d - 1] > v:
                nd += 1
            else:
                na += 1
        if nd > k or na > k:
            continue
        if not _accept(a, d, pats, plens, idx):
            continue
        if d == n - 1:
            if has_chc(a, n, desc, ne_pos, ne_val):
                if fill:
                    for i in range(n):
                        out[start + found, i] = a[i]
                found += 1
            continue
        used[v] = True
        ndesc[d + 1] = nd
        nasc[d + 1] = na
        d += 1
        nxt[d] = 1
    return found


@njit(parallel=True, cache=True)
def class_counts(n, units, plen, pats, plens):
    nu = units.shape[0]
    counts = np.zeros(nu, dtype=np.int64)
    dummy = np.zeros((1, 1), dtype=np.int64)
    for u in prange(nu):
        counts[u] = _class_unit(n, units[u], plen, pats, plens, dummy, 0, False)
    return counts


@njit(parallel=True, cache=True)
def class_fill(n, units, plen, pats, plens, offsets, out):
    nu = units.shape[0]
    for u in prange(nu):
        _class_unit(n, units[u], plen, pats, plens, out, offsets[u], True)
