"""Curling-number primitives.

The curling number of a nonempty word U is the largest k such that
U = X Y^k with Y nonempty; ``min_period`` is the length of the shortest Y
attaining that k (smallest on ties).  The curling number depends only on
term equality, never on digits or magnitudes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .engine import CurlingEngine

__all__ = [
    "CurlingResult",
    "curling_number",
    "bounded_curling_number",
    "curling_transform",
    "madic_valuation",
]


@dataclass(frozen=True)
class CurlingResult:
    k: int
    min_period: int


def curling_number(u: Sequence[int]) -> CurlingResult:
    """Reference implementation: scan candidate periods 1..len(u)//2 and
    count repeated trailing blocks directly.  O(len^2) worst case."""
    L = len(u)
    if L == 0:
        raise ValueError("empty word has no curling number")
    best_k = 1
    best_p = 1
    for p in range(1, L // 2 + 1):
        k = 1
        while (k + 1) * p <= L and _block_eq(u, L - (k + 1) * p, L - k * p, p):
            k += 1
        if k > best_k:
            best_k = k
            best_p = p
    return CurlingResult(best_k, best_p)


def _block_eq(u: Sequence[int], i: int, j: int, p: int) -> bool:
    for t in range(p):
        if u[i + t] != u[j + t]:
            return False
    return True


def bounded_curling_number(u: Sequence[int], floor_m: int) -> int:
    """max(floor_m, curling number of u): the promoted value used by the
    floor-m self-describing sequences."""
    if floor_m < 1:
        raise ValueError("floor must be >= 1")
    return max(floor_m, curling_number(u).k)


def curling_transform(u: Sequence[int]) -> list[int]:
    """Term 1 is 1; term i is the curling number of the first i-1 terms.
    Output length equals input length."""
    L = len(u)
    if L == 0:
        return []
    encoded = _encode_small(u)
    if encoded is not None:
        eng = CurlingEngine(seed=encoded)
        raw = eng.raw_curling(L)
        return [1] + [int(v) for v in raw[1:L]]
    return [1] + [curling_number(u[:i]).k for i in range(1, L)]


def _encode_small(u: Sequence[int]) -> np.ndarray | None:
    """Map terms to small ids preserving equality, or None if the alphabet
    is too large for the compiled engine."""
    ids: dict[int, int] = {}
    out = np.empty(len(u), np.int8)
    for i, v in enumerate(u):
        j = ids.get(v)
        if j is None:
            j = len(ids)
            if j > 119:
                return None
            ids[v] = j
        out[i] = j
    return out


def madic_valuation(n: int, m: int) -> int:
    """Largest e with m**e dividing n."""
    if n == 0:
        raise ValueError("valuation undefined")
    if m < 2:
        raise ValueError("base must be >= 2")
    e = 0
    while n % m == 0:
        n //= m
        e += 1
    return e
