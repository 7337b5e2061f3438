"""The floor-m self-describing sequences and their block/glue structure.

Level m starts with the single term m and appends ``max(m, k)`` where k is
the curling number of everything so far.  Terms where the raw curling
number fell below m are "promoted"; promoted positions at level m+1 mark
the starts of the glue strings of level m, which is what makes the cheap
glue-length computation possible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .engine import CurlingEngine
from .kernel import curling_number

__all__ = [
    "AnnotatedTerm",
    "BlockDecomposition",
    "DecompositionBudgetError",
    "StructureReport",
    "generate_reference",
    "annotate",
    "expand_via_promotion",
    "generate_fast",
    "decompose",
    "glue_lengths_via_promotion",
    "verify_structure",
]

DEFAULT_BUDGET = 10_000_000


@dataclass(frozen=True)
class AnnotatedTerm:
    value: int
    promoted: bool
    min_y_len: int  # 0 iff promoted, else the smallest period attaining k


@dataclass
class BlockDecomposition:
    m: int
    blocks: list[list[int]]
    glues: list[list[int]]
    tails: list[list[int]]


class DecompositionBudgetError(RuntimeError):
    def __init__(self, message: str, partial: BlockDecomposition):
        super().__init__(message)
        self.partial = partial


# ---------------------------------------------------------------------------
# shared engines: one resumable generator per level, one promoted-position
# scan cursor per level.  Everything downstream (sigma tables, records,
# first-occurrence chains) reuses these, so long prefixes are paid for once.

_engines: dict[int, CurlingEngine] = {}
_promoted: dict[int, list[int]] = {}  # level -> 0-based promoted positions
_promoted_scanned: dict[int, int] = {}


def _engine(m: int) -> CurlingEngine:
    eng = _engines.get(m)
    if eng is None:
        eng = CurlingEngine(floor=m)
        _engines[m] = eng
    return eng


def _values(m: int, count: int) -> np.ndarray:
    eng = _engine(m)
    if eng.filled < count:
        eng.generate_to(count)
    return eng.values(count)


def _promoted_positions(level: int, want: int) -> list[int]:
    """First ``want`` promoted positions (0-based) of the level sequence,
    extending it as needed."""
    eng = _engine(level)
    pos = _promoted.setdefault(level, [0])
    scanned = _promoted_scanned.get(level, 1)
    while len(pos) < want:
        target = max(4096, 2 * eng.filled)
        eng.generate_to(target)
        raw = eng.raw_curling(target)
        lo = max(scanned, 1)
        hits = np.flatnonzero(raw[lo:target] < level) + lo
        pos.extend(int(i) for i in hits)
        scanned = target
        _promoted_scanned[level] = scanned
    return pos


# ---------------------------------------------------------------------------


def generate_reference(m: int, count: int) -> list[int]:
    """First ``count`` terms of the level-m sequence, computed term by term
    from the incremental curling state."""
    if m < 1 or count < 1:
        raise ValueError("need m >= 1 and count >= 1")
    return [int(v) for v in _values(m, count)]


def annotate(m: int, count: int) -> list[AnnotatedTerm]:
    """Level-m terms with promotion flags and shortest attaining periods."""
    if m < 1 or count < 1:
        raise ValueError("need m >= 1 and count >= 1")
    eng = _engine(m)
    eng.generate_to(max(eng.filled, count))
    vals = eng.values(count)
    raw = eng.raw_curling(count)
    pmin = eng.min_periods(count)
    out = []
    for i in range(count):
        promoted = i == 0 or raw[i] < m
        out.append(
            AnnotatedTerm(int(vals[i]), bool(promoted), 0 if promoted else int(pmin[i]))
        )
    return out


def expand_via_promotion(
    m: int, upper: Sequence[AnnotatedTerm], max_len: int
) -> list[int]:
    """Rebuild a level-m prefix from an annotated level-(m+1) prefix.

    Starting from (m), a promoted upper term replaces the word D by
    D^{m+1} followed by the term's value; a non-promoted term appends its
    value.  Stops once ``max_len`` is reached (output truncated)."""
    if m < 1:
        raise ValueError("need m >= 1")
    if upper and upper[0].value != m + 1:
        raise ValueError("not a level-(m+1) prefix")
    d: list[int] = [m]
    for term in upper:
        if len(d) >= max_len:
            break
        if term.promoted:
            d = d * (m + 1)
        d.append(term.value)
    return d[:max_len]


def generate_fast(m: int, count: int) -> list[int]:
    """Same output as :func:`generate_reference`, but long prefixes are
    rebuilt by promotion expansion from a short annotated prefix of the
    level above (each promoted upper term multiplies the length by m+1, so
    the upper prefix needed is tiny)."""
    if m < 1 or count < 1:
        raise ValueError("need m >= 1 and count >= 1")
    if m >= 6 or count <= 4096:
        return generate_reference(m, count)
    t = 256
    while True:
        upper = annotate(m + 1, t)
        out = expand_via_promotion(m, upper, count)
        if len(out) >= count:
            return out[:count]
        t *= 2


def _extract_glue(m: int, seed: list[int], budget: int) -> list[int]:
    """Continue the floor-m recurrence after ``seed`` and collect the values
    until the first one that falls back to m (exclusive)."""
    if budget <= 0:
        raise DecompositionBudgetError(
            "glue extraction exceeded budget", BlockDecomposition(m, [], [], [])
        )
    eng = CurlingEngine(floor=m, seed=np.asarray(seed, np.int8))
    start = len(seed)
    target = start
    while True:
        target = min(max(target + 64, 2 * target), start + budget + 1)
        eng.generate_to(target)
        tail = eng.values(target)[start:]
        drops = np.flatnonzero(tail <= m)
        if len(drops):
            return [int(v) for v in tail[: drops[0]]]
        if target >= start + budget + 1:
            raise DecompositionBudgetError(
                "glue extraction exceeded budget",
                BlockDecomposition(m, [], [[int(v) for v in tail]], []),
            )


def decompose(m: int, n_blocks: int, budget: int = DEFAULT_BUDGET) -> BlockDecomposition:
    """Blocks, glue strings and tails of the level-m sequence.

    Block n+1 is m+1 copies of block n followed by the n-th glue string;
    tail n+1 is the concatenation of the first n glue strings."""
    if m < 1 or n_blocks < 1:
        raise ValueError("need m >= 1 and n_blocks >= 1")
    blocks = [[m]]
    glues: list[list[int]] = []
    tails: list[list[int]] = []
    result = BlockDecomposition(m, blocks, glues, tails)
    for _ in range(1, n_blocks):
        seed = blocks[-1] * (m + 1)
        if len(seed) > budget:
            raise DecompositionBudgetError("block length exceeded budget", result)
        try:
            glue = _extract_glue(m, seed, budget - len(seed))
        except DecompositionBudgetError as exc:
            exc.partial = result
            raise
        glues.append(glue)
        blocks.append(seed + glue)
        tails.append([v for g in glues for v in g])
    return result


def glue_lengths_via_promotion(m: int, glue_count: int) -> list[int]:
    """Lengths of the first ``glue_count`` glue strings of level m, read off
    as the gaps between consecutive promoted positions of level m+1."""
    if m < 1 or glue_count < 1:
        raise ValueError("need m >= 1 and glue_count >= 1")
    pos = _promoted_positions(m + 1, glue_count + 1)
    return [pos[i + 1] - pos[i] for i in range(glue_count)]


# ---------------------------------------------------------------------------


@dataclass
class StructureReport:
    m: int
    n_max: int
    checks: list[tuple[int, int, str, bool]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(ok for *_rest, ok in self.checks)

    @property
    def failures(self) -> list[tuple[int, int, str, bool]]:
        return [c for c in self.checks if not c[3]]


def _occurrences(hay: list[int], needle: list[int]) -> list[int]:
    hb = bytes(bytearray(v & 0xFF for v in hay))
    nb = bytes(bytearray(v & 0xFF for v in needle))
    out = []
    i = hb.find(nb)
    while i != -1:
        out.append(i)
        i = hb.find(nb, i + 1)
    return out


def verify_structure(m: int, n_max: int, budget: int = DEFAULT_BUDGET) -> StructureReport:
    """Check, for 2 <= n <= n_max: (a) block n is a prefix of level m,
    (b) tail n is a prefix of level m+1, (c) tail n occurs in block n
    exactly once, as its suffix."""
    dec = decompose(m, n_max, budget)
    report = StructureReport(m, n_max)
    for n in range(2, n_max + 1):
        block = dec.blocks[n - 1]
        tail = dec.tails[n - 2]
        ok_a = block == generate_reference(m, len(block))
        report.checks.append((m, n, "block-is-prefix", ok_a))
        ok_b = tail == generate_reference(m + 1, len(tail))
        report.checks.append((m, n, "tail-is-upper-prefix", ok_b))
        occ = _occurrences(block, tail)
        ok_c = occ == [len(block) - len(tail)]
        report.checks.append((m, n, "tail-is-unique-suffix", ok_c))
    return report


def _first_occurrence_in_level(m: int, t: int, budget: int) -> int | None:
    """1-based position of the first t in the level-m sequence, scanning at
    most ``budget`` terms (shared engine)."""
    vals = _values(m, budget)
    hits = np.flatnonzero(vals == t)
    if len(hits):
        return int(hits[0]) + 1
    return None


def _self_check_small(m: int, count: int) -> bool:
    """Cross-check the engine against a literal term-by-term rebuild with
    the reference kernel (test helper)."""
    word = [m]
    for _ in range(count - 1):
        word.append(max(m, curling_number(word).k))
    return word == generate_reference(m, count)
