"""Classic sequence generators, curling transforms of them, and four
variant recurrences built on the curling number.
"""

from __future__ import annotations

from dataclasses import dataclass

from .hierarchy import generate_reference
from .kernel import curling_number

__all__ = [
    "NamedSequence",
    "generate_named",
    "earliest_all_ones_preimage",
    "variant_floor_half",
    "variant_shift",
    "variant_greedy",
    "variant_2d",
]


@dataclass(frozen=True)
class NamedSequence:
    name: str
    terms: tuple[int, ...]


def _thue_morse(count: int) -> list[int]:
    # parity of binary ones of n-1 (OEIS A010060)
    return [bin(n).count("1") % 2 for n in range(count)]


def _kolakoski(count: int) -> list[int]:
    # self-describing run lengths (OEIS A000002)
    terms = [1, 2, 2]
    ptr = 2
    val = 1
    while len(terms) < count:
        terms.extend([val] * terms[ptr])
        val = 3 - val
        ptr += 1
    return terms[:count]


def _ruler(count: int) -> list[int]:
    # 1 + exponent of 2 in n (OEIS A001511)
    return [(n & -n).bit_length() for n in range(1, count + 1)]


_NAMED = {
    "thue_morse": _thue_morse,
    "kolakoski": _kolakoski,
    "ruler": _ruler,
    "A": lambda count: generate_reference(1, count),
    "A2": lambda count: generate_reference(2, count),
}


def generate_named(name: str, count: int) -> NamedSequence:
    if count < 1:
        raise ValueError("need count >= 1")
    gen = _NAMED.get(name)
    if gen is None:
        raise ValueError(f"unknown sequence name: {name!r}")
    return NamedSequence(name, tuple(gen(count)))


def earliest_all_ones_preimage(count: int) -> list[int]:
    """Lexicographically earliest positive word whose curling transform is
    all ones: greedily take the smallest value that keeps every prefix's
    curling number at 1.  The result is the ruler sequence."""
    if count < 1:
        raise ValueError("need count >= 1")
    word: list[int] = []
    for _ in range(count):
        v = 1
        while curling_number(word + [v]).k != 1:
            v += 1
        word.append(v)
    assert word == _ruler(count)
    return word


def variant_floor_half(count: int) -> list[int]:
    """Recurrence a(n+1) = floor(C(a(1..n)) / 2) seeded so that the sequence
    starts 0, 0, 1, ... (OEIS A091970)."""
    if count < 1:
        raise ValueError("need count >= 1")
    word = [0]
    while len(word) < count:
        word.append(curling_number(word).k // 2)
    return word


def variant_shift(count: int) -> list[int]:
    """a(1) = a(2) = 1, a(n+2) = C(a(1..n)): the curling transform of the
    output equals the output shifted left by one (OEIS A094006)."""
    if count < 2:
        return [1][:count]
    word = [1, 1]
    for n in range(1, count - 1):
        if len(word) >= count:
            break
        word.append(curling_number(word[:n]).k)
    return word[:count]


def variant_greedy(count: int) -> list[int]:
    """Greedy floor-2 variant: start at 2; append the curling number when it
    exceeds 1, else the smallest value maximising the next curling number
    (OEIS A094321).  Only values already present need be tried: a new value
    always yields curling number 1, and repeating the last value yields at
    least 2."""
    if count < 1:
        raise ValueError("need count >= 1")
    word = [2]
    while len(word) < count:
        k = curling_number(word).k
        if k > 1:
            word.append(k)
            continue
        best_v, best_k = None, 0
        for v in sorted(set(word)):
            kv = curling_number(word + [v]).k
            if kv > best_k:
                best_v, best_k = v, kv
        word.append(best_v)
    return word


def variant_2d(rows: int, cols: int) -> list[list[int]]:
    """Two-dimensional variant: first row and column carry the level-1
    sequence; each interior cell is the larger of the curling numbers of its
    row prefix and its column prefix (OEIS A094781).  Symmetric."""
    if rows < 1 or cols < 1:
        raise ValueError("need rows, cols >= 1")
    a = generate_reference(1, max(rows, cols))
    t = [[0] * cols for _ in range(rows)]
    for j in range(cols):
        t[0][j] = a[j]
    for i in range(rows):
        t[i][0] = a[i]
    for i in range(1, rows):
        for j in range(1, cols):
            k1 = curling_number([t[i][jj] for jj in range(j)]).k
            k2 = curling_number([t[ii][j] for ii in range(i)]).k
            t[i][j] = max(k1, k2)
    return t
