"""Length tables, record values, ruler smoothing and closed forms.

Notation used throughout (all 1-based externally):

* sigma(m, n): length of the n-th glue string at level m;
* beta(m, n):  length of the n-th block at level m,
  beta(1) = 1, beta(n+1) = (m+1) beta(n) + sigma(n);
* tau(m, n):   length of the n-th tail, tau(n+1) = sigma(1) + ... + sigma(n);
* pi(m, j):    j-th running record of sigma (j from 0);
* rho(m, j):   j-th record of the smoothed (ruler-aligned) sigma.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .hierarchy import glue_lengths_via_promotion
from .kernel import madic_valuation

__all__ = [
    "LengthTable",
    "RulerFit",
    "Rec1Report",
    "GrowthConstants",
    "build_length_table",
    "records",
    "smooth_to_ruler",
    "check_rec1",
    "beta_closed_form",
    "rho_closed_form",
    "beta_region_max",
    "rho_region_max",
    "tau_estimate",
    "growth_constants",
]


@dataclass
class LengthTable:
    m: int
    n_max: int
    _sigma: list[int]
    _beta: list[int]
    _tau: list[int]

    def sigma(self, n: int) -> int:
        return self._sigma[n - 1]

    def beta(self, n: int) -> int:
        return self._beta[n - 1]

    def tau(self, n: int) -> int:
        return self._tau[n - 1]


def build_length_table(m: int, n_max: int) -> LengthTable:
    """Exact sigma/beta/tau values for n = 1..n_max (arbitrary precision)."""
    if m < 1 or n_max < 1:
        raise ValueError("need m >= 1 and n_max >= 1")
    sigma = glue_lengths_via_promotion(m, n_max) if n_max >= 1 else []
    beta = [1]
    tau = [0]
    for n in range(1, n_max):
        beta.append((m + 1) * beta[-1] + sigma[n - 1])
        tau.append(tau[-1] + sigma[n - 1])
    return LengthTable(m, n_max, sigma, beta, tau)


def records(sigma: list[int]) -> list[tuple[int, int]]:
    """Running strict maxima as (value, first 1-based index) pairs."""
    if not sigma:
        raise ValueError("need a nonempty value list")
    out: list[tuple[int, int]] = []
    best = 0
    for i, v in enumerate(sigma, start=1):
        if v > best:
            best = v
            out.append((v, i))
    return out


# ---------------------------------------------------------------------------
# ruler smoothing


@dataclass
class RulerFit:
    m: int
    rho: list[int]
    pi: list[int]
    splits: list[tuple[int, int]]  # (1-based sigma index, original value)
    mismatches: list[tuple[int, int]]  # (1-based sigma index, value)


def smooth_to_ruler(m: int, sigma: list[int]) -> RulerFit:
    """Align sigma against a ruler template r(n) = rho(|n|_{m+1}).

    Values are consumed left to right.  A value equal to rho(c) occupies one
    ruler position; a value equal to rho(c)+1 may be split into (value-1, 1),
    occupying two.  The first time a class c is met its rho(c) is unknown, so
    both readings are explored and the alignment with the fewest mismatches
    wins (whole preferred on ties).  A value fitting neither reading is
    recorded as a mismatch and the scan resynchronises at the next class-0
    position."""
    if len(sigma) < 2:
        raise ValueError("need at least two values to smooth")
    base = m + 1
    best: tuple[int, RulerFit] | None = None

    # depth-first over the (few) first-encounter choices
    stack = [(0, 1, {}, [], [])]  # i, ruler position n, rho, splits, mismatches
    while stack:
        i, n, rho, splits, mismatches = stack.pop()
        ok = True
        while i < len(sigma):
            v = sigma[i]
            c = madic_valuation(n, base)
            if c in rho:
                if v == rho[c]:
                    n += 1
                elif v == rho[c] + 1 and madic_valuation(n + 1, base) == 0:
                    splits = splits + [(i + 1, v)]
                    n += 2
                else:
                    mismatches = mismatches + [(i + 1, v)]
                    n += 1
                    while madic_valuation(n, base) != 0:
                        n += 1
                i += 1
            else:
                floor_val = max(rho.values(), default=0)
                # try the split reading later (lower priority on the stack
                # means it is explored only after the whole reading fails)
                if v - 1 > floor_val and madic_valuation(n + 1, base) == 0:
                    alt = dict(rho)
                    alt[c] = v - 1
                    stack.append((i + 1, n + 2, alt, splits + [(i + 1, v)], mismatches))
                if v > floor_val:
                    rho = dict(rho)
                    rho[c] = v
                    n += 1
                    i += 1
                else:
                    ok = False
                    break
        if not ok:
            continue
        fit = RulerFit(
            m,
            [rho[c] for c in sorted(rho)],
            [v for v, _ in records(sigma)],
            splits,
            mismatches,
        )
        if not mismatches:
            return fit
        if best is None or len(mismatches) < best[0]:
            best = (len(mismatches), fit)
    if best is None:
        raise RuntimeError("no ruler alignment found")
    return best[1]


# ---------------------------------------------------------------------------
# the record recurrence and closed forms


@dataclass
class Rec1Report:
    m: int
    entries: list[tuple[int, int, int, int]] = field(default_factory=list)
    # (n, rho(n+1), predicted, residual)

    @property
    def all_zero(self) -> bool:
        return all(r == 0 for *_x, r in self.entries)


def check_rec1(m: int, j_max: int) -> Rec1Report:
    """Test rho(n+1) = rho(n) + beta_upper(n+1) + sigma_upper(n+1) for
    0 <= n < j_max, where the upper tables are taken at level m+1."""
    base = m + 1
    need = base**j_max + 4 * j_max + 8  # ruler positions, with split slack
    fit = smooth_to_ruler(m, glue_lengths_via_promotion(m, need))
    if len(fit.rho) <= j_max:
        raise RuntimeError("smoothed range too short for requested records")
    upper = build_length_table(m + 1, j_max + 1)
    report = Rec1Report(m)
    for n in range(j_max):
        predicted = fit.rho[n] + upper.beta(n + 1) + upper.sigma(n + 1)
        report.entries.append(
            (n, fit.rho[n + 1], predicted, fit.rho[n + 1] - predicted)
        )
    return report


def beta_region_max(m: int) -> int:
    return (m + 1) ** 2 - 1


def rho_region_max(m: int) -> int:
    return (m + 2) ** 2 - 1


def beta_closed_form(m: int, n: int):
    """Exact block length inside 1 <= n <= (m+1)^2 - 1; evaluated by the same
    formula (an approximation) outside that region.  Returns an int when the
    expression is integral, otherwise a Fraction."""
    if m < 1 or n < 1:
        raise ValueError("need m >= 1 and n >= 1")
    b = m + 1
    v = (n - 1) % b
    val = Fraction(b**n - 1, m) + Fraction(2 * (b ** (n - 1) - b**v), b ** b - 1)
    if val.denominator == 1:
        return int(val)
    if n <= beta_region_max(m):
        raise ValueError("closed-form integrality violated")
    return val


def rho_closed_form(m: int, n: int):
    """Exact smoothed record inside 0 <= n <= (m+2)^2 - 1 (approximation
    outside): (m (n+1+2u) + beta_upper(n+1)) / (m+1) with u = n // (m+2)."""
    if m < 1 or n < 0:
        raise ValueError("need m >= 1 and n >= 0")
    u = n // (m + 2)
    upper_beta = beta_closed_form(m + 1, n + 1)
    val = Fraction(m * (n + 1 + 2 * u) + upper_beta, m + 1)
    if val.denominator == 1:
        return int(val)
    if n <= rho_region_max(m):
        raise ValueError("closed-form integrality violated")
    return val


def tau_estimate(m: int, mu: int) -> Fraction:
    """Tail-length growth estimate ((m+2)/(m+1)) ((m+2)^mu - m (m+1)^(mu-1))."""
    if m < 1 or mu < 1:
        raise ValueError("need m >= 1 and mu >= 1")
    return Fraction(m + 2, m + 1) * ((m + 2) ** mu - m * (m + 1) ** (mu - 1))


@dataclass
class GrowthConstants:
    m: int
    epsilon: float
    lam: float
    epsilon_history: list[float]
    lambda_history: list[float]


def growth_constants(m: int, n_max: int) -> GrowthConstants:
    """epsilon: beta(n) / (m+1)^(n-1) at n = n_max, with trailing history;
    lambda: last sigma record divided by (m+2)^j, with history over j."""
    table = build_length_table(m, n_max)
    eps_hist = [
        table.beta(n) / float((m + 1) ** (n - 1))
        for n in range(max(1, n_max - 9), n_max + 1)
    ]
    recs = records(table._sigma)
    lam_hist = [v / float((m + 2) ** j) for j, (v, _i) in enumerate(recs)]
    return GrowthConstants(m, eps_hist[-1], lam_hist[-1], eps_hist, lam_hist)


def _log10_tau_estimate(m: int, mu: float) -> float:
    """log10 of the tau estimate for real mu (overflow-safe for moderate mu)."""
    b, c = m + 1, m + 2
    main = mu * math.log10(c)
    corr = math.log1p(-(m / b) * (b / c) ** mu) / math.log(10)
    return math.log10(Fraction(c, b)) + main + corr
