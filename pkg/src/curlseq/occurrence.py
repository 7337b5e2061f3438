"""First-occurrence positions of each value t across levels.

Small cases are found by direct scanning.  The position of the first 5 is
far beyond any generatable prefix, but it can be chained down exactly from
level 3 (where 5 first appears at position 343) to an exact 38-digit
position at level 2, and from there to a double-logarithmic estimate at
level 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .analysis import build_length_table, growth_constants, _log10_tau_estimate
from .hierarchy import _first_occurrence_in_level

__all__ = [
    "TowerExpr",
    "OccurrenceReport",
    "NotFoundError",
    "first_occurrence_direct",
    "eq_s1_position",
    "first_five_chain",
    "tower_estimate",
]


class NotFoundError(LookupError):
    def __init__(self, t: int, m: int, budget: int):
        super().__init__(f"value {t} not found in the first {budget} terms of level {m}")
        self.t = t
        self.m = m
        self.budget = budget


@dataclass(frozen=True)
class TowerExpr:
    """Iterated exponential, levels bottom-up: [2, 3, 4] means 2**(3**4)."""

    levels: tuple[int, ...]
    loglog10: Optional[float]

    @property
    def height(self) -> int:
        return len(self.levels)


@dataclass
class OccurrenceReport:
    t: int
    positions: dict[int, tuple[object, str]] = field(default_factory=dict)
    anchor_index: Optional[int] = None
    mu: Optional[float] = None
    loglog10: Optional[float] = None


def first_occurrence_direct(t: int, m: int, budget: int) -> int:
    """1-based position of the first t in the level-m sequence, scanning at
    most ``budget`` terms."""
    if t < m:
        raise ValueError("level-m terms are all >= m")
    pos = _first_occurrence_in_level(m, t, budget)
    if pos is None:
        raise NotFoundError(t, m, budget)
    return pos


def eq_s1_position(t: int) -> int:
    """Exact first position of t+2 in the level-t sequence:
    ((t+1)^(t+2) + 2t - 1) / t, asserted integral."""
    if t < 1:
        raise ValueError("need t >= 1")
    num = (t + 1) ** (t + 2) + 2 * t - 1
    q, r = divmod(num, t)
    if r != 0:
        raise ArithmeticError("closed-form position is not integral")
    return q


X2_EXACT = 77709404388415370160829246932345692180


def first_five_chain() -> OccurrenceReport:
    """Chain the first occurrence of 5 down the levels.

    Level 3: direct scan gives position 343.  Level 2: 343 must equal a tail
    length, tau(i) = 343 at i = 80, so the first 5 at level 2 sits at block
    length beta(80) exactly.  Level 1: solve the tail-growth estimate for mu
    with tau ~ x(2), then the position is roughly the mu-th level-1 block,
    reported as log10(log10(position))."""
    report = OccurrenceReport(t=5)
    x3 = first_occurrence_direct(5, 3, 1000)
    if x3 != eq_s1_position(3):
        raise ArithmeticError("level-3 anchor mismatch")
    report.positions[3] = (x3, "exact")

    table = build_length_table(2, 81)
    anchor = next((i for i in range(1, 82) if table.tau(i) == x3), None)
    if anchor is None:
        raise ArithmeticError("first-five anchor mismatch")
    report.anchor_index = anchor
    x2 = table.beta(anchor)
    report.positions[2] = (x2, "exact")

    # mu solves tau_estimate(1, mu) = x2 (monotone; bisection in log space)
    target = math.log10(x2)
    lo, hi = 1.0, 400.0
    while hi - lo > 1e-9:
        mid = (lo + hi) / 2
        if _log10_tau_estimate(1, mid) < target:
            lo = mid
        else:
            hi = mid
    mu = (lo + hi) / 2
    report.mu = mu

    # position ~ epsilon * 2^(2^mu); log10 log10 of that:
    eps = growth_constants(1, 30).epsilon
    loglog10 = mu * math.log10(2.0) + math.log10(
        math.log10(2.0) + math.log10(eps) / 2.0**mu
    )
    report.loglog10 = loglog10
    # the level-1 position itself is unwritable; store its double log
    report.positions[1] = (loglog10, "estimated-loglog10")
    return report


def _tower_loglog10(levels: tuple[int, ...]) -> float:
    """log10(log10(tower)) computed analytically; the part of the tower above
    the second level must be small enough for exact evaluation."""
    if len(levels) == 1:
        return math.log10(math.log10(levels[0]))
    v = 1
    for x in reversed(levels[2:]):
        v = x**v
    return float(v) * math.log10(levels[1]) + math.log10(math.log10(levels[0]))


def tower_estimate(t: int) -> TowerExpr:
    """Estimated first position of t at level 1, as an exponential tower of
    height t-1: levels [2, 2, 3, 4, ..., t-1].  The numeric double log is
    evaluated for t = 5 only; taller towers stay symbolic."""
    if t < 5:
        raise ValueError("use exact positions for t <= 4")
    levels = tuple([2, 2] + list(range(3, t)))
    loglog10 = _tower_loglog10(levels) if t == 5 else None
    return TowerExpr(levels=levels, loglog10=loglog10)
