"""Compiled inner loops: incremental curling over a growing word, and the
binary {2,3} extension search.

The incremental core keeps, for every candidate period p, the length of the
longest p-periodic suffix seen so far (``run[p]``).  Appending one term
updates every tracked run in O(1), so producing n terms costs O(n^2/4)
comparisons overall.  Only periods p <= L//2 are tracked: a repetition count
k >= 2 needs at least 2p trailing terms, and shorter suffixes cannot beat
k = 1.  When a new period enters the tracked range its run is initialised by
a direct backward scan (almost always a handful of comparisons).
"""

import numpy as np
from numba import njit

__all__ = ["curl_step_range", "extend_word", "search_block"]


@njit(cache=True)
def curl_step_range(a, raw, pmin, run, start, stop, floor, generate):
    """Process word positions ``start .. stop-1`` (0-based).

    At position L the word is ``a[:L]``; its curling number is written to
    ``raw[L]`` and the smallest period attaining it to ``pmin[L]``.  With
    ``generate`` set, ``a[L] = max(floor, raw[L])`` is appended, so the call
    extends the word; otherwise ``a`` is read-only (transform mode).

    ``run[p]`` must hold the longest p-periodic suffix length of ``a[:start-1]``
    for every p <= (start-1)//2; passing start=1 on zeroed arrays satisfies
    this trivially.  State in ``run`` is left consistent for a resumed call.
    """
    for L in range(start, stop):
        x = a[L - 1]
        half = L >> 1
        if L % 2 == 0:
            # period L/2 becomes viable now; rebuild its run for a[:L-1]
            p = half
            c = 0
            i = L - 2
            while i - p >= 0 and a[i] == a[i - p]:
                c += 1
                i -= 1
            run[p] = c
        kmax = 1
        pbest = 1
        for p in range(1, half + 1):
            if a[L - 1 - p] == x:
                r = run[p] + 1
                run[p] = r
                if r >= p:
                    q = r // p + 1
                    if q > kmax:
                        kmax = q
                        pbest = p
            else:
                run[p] = 0
        raw[L] = kmax
        pmin[L] = pbest
        if generate:
            a[L] = kmax if kmax > floor else floor


@njit(cache=True)
def extend_word(buf, n, cap):
    """Extend ``buf[:n]`` by repeatedly appending its curling number while
    that number is >= 2.  Returns the final length, negated if ``cap`` was
    reached before a 1 appeared."""
    L = n
    while True:
        kmax = 1
        for p in range(1, L // 2 + 1):
            k = 1
            while (k + 1) * p <= L:
                ok = True
                base = L - (k + 1) * p
                top = L - k * p
                for i in range(p):
                    if buf[base + i] != buf[top + i]:
                        ok = False
                        break
                if not ok:
                    break
                k += 1
            if k > kmax:
                kmax = k
        if kmax < 2:
            return L
        if L >= cap:
            return -L
        buf[L] = kmax
        L += 1


@njit(cache=True)
def search_block(n, p, prefix_lo, prefix_hi, budget, argmax_cap):
    """Evaluate every start of length n whose leading p bits encode a value
    in [prefix_lo, prefix_hi).  Bit 0 maps to term 2, bit 1 to term 3, most
    significant bit first.  Returns (best, total, hits, argmax_count,
    argmax_codes) where argmax_codes holds full n-bit codes of the starts
    attaining ``best`` (at most argmax_cap recorded; argmax_count is exact).
    """
    m = n - p
    cap = n + budget
    buf = np.empty(cap + 1, np.int8)
    best = 0
    total = 0
    hits = 0
    argmax_count = 0
    argmax = np.zeros(argmax_cap, np.int64)
    for pref in range(prefix_lo, prefix_hi):
        for s in range(1 << m):
            for i in range(p):
                buf[i] = 2 + ((pref >> (p - 1 - i)) & 1)
            for i in range(m):
                buf[p + i] = 2 + ((s >> (m - 1 - i)) & 1)
            L = extend_word(buf, n, cap)
            if L < 0:
                hits += 1
                L = -L
            total += L
            if L > best:
                best = L
                argmax_count = 0
            if L == best:
                if argmax_count < argmax_cap:
                    argmax[argmax_count] = (pref << m) | s
                argmax_count += 1
    return best, total, hits, argmax_count, argmax
