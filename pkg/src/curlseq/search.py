"""Exhaustive extension experiment over binary {2,3} starting strings.

Every start is extended by repeatedly appending the curling number of the
word so far; the extension stops just before the first 1 would appear.  The
experiment records, per starting length n, the maximum and the exact average
of the final lengths over all 2^n starts.
"""

from __future__ import annotations

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from ._fast import extend_word, search_block

__all__ = [
    "ExtensionResult",
    "SearchRow",
    "extend_until_drop",
    "exhaustive_search",
    "records_scan",
    "format_average",
    "rows_to_csv",
]

DEFAULT_BUDGET = 10_000
ARGMAX_CAP = 64


@dataclass(frozen=True)
class ExtensionResult:
    start: tuple[int, ...]
    final_length: int
    final_word: tuple[int, ...]
    hit_budget: bool


@dataclass(frozen=True)
class SearchRow:
    n: int
    max_len: int
    argmax_starts: tuple[tuple[int, ...], ...]
    avg_num: int  # sum of final lengths over all 2^n starts
    avg_den: int  # 2^n
    budget_hits: int


def extend_until_drop(start, budget: int = 100_000) -> ExtensionResult:
    start = tuple(int(v) for v in start)
    if not start:
        raise ValueError("starting string must be nonempty")
    if any(v not in (2, 3) for v in start):
        raise ValueError("starting string must use only the values 2 and 3")
    n = len(start)
    cap = n + budget
    buf = np.empty(cap + 1, np.int8)
    buf[:n] = start
    length = int(extend_word(buf, n, cap))
    hit = length < 0
    if hit:
        length = -length
    word = tuple(int(v) for v in buf[:length])
    return ExtensionResult(start, length, word, hit)


def _code_to_start(code: int, n: int) -> tuple[int, ...]:
    return tuple(2 + ((code >> (n - 1 - i)) & 1) for i in range(n))


def _run_blocks(args):
    n, p, lo, hi, budget = args
    best, total, hits, count, argmax = search_block(n, p, lo, hi, budget, ARGMAX_CAP)
    return best, total, hits, count, [int(c) for c in argmax[: min(count, ARGMAX_CAP)]]


def exhaustive_search(n: int, workers: int = 1, budget: int = DEFAULT_BUDGET) -> SearchRow:
    """Evaluate all 2^n starts.  The prefix space is partitioned into
    disjoint chunks processed independently; the merge (max, argmax union,
    sum) is associative and applied in fixed prefix order, so the result is
    identical for any worker count."""
    if n < 1:
        raise ValueError("need n >= 1")
    p = min(n, 10)
    nblocks = 1 << p
    chunks = max(1, min(nblocks, workers * 8))
    bounds = [
        (n, p, nblocks * i // chunks, nblocks * (i + 1) // chunks, budget)
        for i in range(chunks)
        if nblocks * i // chunks < nblocks * (i + 1) // chunks
    ]
    if workers <= 1 or len(bounds) == 1:
        partials = [_run_blocks(b) for b in bounds]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            partials = list(pool.map(_run_blocks, bounds))

    best = 0
    total = 0
    hits = 0
    argmax_codes: list[int] = []
    overflow = False
    for pbest, ptotal, phits, pcount, pargmax in partials:
        total += ptotal
        hits += phits
        if pbest > best:
            best = pbest
            argmax_codes = []
        if pbest == best:
            argmax_codes.extend(pargmax)
            if pcount > len(pargmax):
                overflow = True
    if overflow:
        raise RuntimeError("argmax set larger than recording cap")
    return SearchRow(
        n=n,
        max_len=best,
        argmax_starts=tuple(_code_to_start(c, n) for c in sorted(argmax_codes)),
        avg_num=total,
        avg_den=1 << n,
        budget_hits=hits,
    )


def records_scan(
    n_max: int, workers: int = 1, budget: int = DEFAULT_BUDGET
) -> tuple[list[SearchRow], list[int]]:
    """Rows for n = 1..n_max plus the lengths n where the maximum jumps by
    more than 1 over the previous row."""
    rows = [exhaustive_search(n, workers, budget) for n in range(1, n_max + 1)]
    jumps = [
        rows[i].n
        for i in range(1, len(rows))
        if rows[i].max_len - rows[i - 1].max_len > 1
    ]
    return rows, jumps


def format_average(num: int, den: int) -> str:
    """Four decimal places, ties rounded toward zero, trailing zeros dropped
    (the rendering used by the published table: 6.21875 -> 6.2187 but
    12.529296875 -> 12.5293)."""
    q, r = divmod(num * 10_000, den)
    scaled = q + (1 if 2 * r > den else 0)
    return f"{scaled // 10_000}.{scaled % 10_000:04d}".rstrip("0").rstrip(".")


def rows_to_csv(rows: list[SearchRow]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["n", "max", "avg", "avg_num", "avg_den", "argmax_count", "first_argmax"])
    for row in rows:
        writer.writerow(
            [
                row.n,
                row.max_len,
                format_average(row.avg_num, row.avg_den),
                row.avg_num,
                row.avg_den,
                len(row.argmax_starts),
                " ".join(str(v) for v in row.argmax_starts[0]) if row.argmax_starts else "",
            ]
        )
    return out.getvalue()
