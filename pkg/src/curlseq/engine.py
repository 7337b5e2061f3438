"""Resumable incremental curling engine.

A :class:`CurlingEngine` owns a growing word together with the per-period
run state needed to compute each next curling number in amortised O(L).
It supports two phases over the same state:

* transform mode: the word is given; the engine computes the curling number
  of every proper prefix;
* generate mode: each processed position appends ``max(floor, k)``, i.e. it
  produces the floor-m self-describing sequence from its seed.

A single engine may switch from transform to generate (seeded generation),
which is how glue strings are extracted.
"""

from __future__ import annotations

import numpy as np

from ._fast import curl_step_range

__all__ = ["CurlingEngine"]

_MAX_INT8 = 120


class CurlingEngine:
    """Single-owner, resumable curling-number state over one word."""

    def __init__(self, floor: int | None = None, seed=None, capacity: int = 4096):
        if floor is None and seed is None:
            raise ValueError("need a floor, a seed word, or both")
        if seed is None:
            seed = [floor]
        seed = np.asarray(seed)
        if len(seed) == 0:
            raise ValueError("seed word must be nonempty")
        if seed.max(initial=0) > _MAX_INT8 or seed.min(initial=0) < -_MAX_INT8:
            raise ValueError("engine words must have small integer terms")
        capacity = max(capacity, len(seed) + 1)
        self.floor = floor
        self._a = np.zeros(capacity, np.int8)
        self._raw = np.zeros(capacity, np.int8)
        self._pmin = np.zeros(capacity, np.int32)
        self._run = np.zeros(capacity // 2 + 2, np.int32)
        self._a[: len(seed)] = seed
        self._filled = len(seed)  # terms present in the word
        self._pos = 1  # next position whose curling number is to be computed

    # -- storage ---------------------------------------------------------

    def _grow(self, capacity: int) -> None:
        if capacity <= len(self._a):
            return
        capacity = max(capacity, 2 * len(self._a))
        for name in ("_a", "_raw", "_pmin"):
            old = getattr(self, name)
            new = np.zeros(capacity, old.dtype)
            new[: len(old)] = old
            setattr(self, name, new)
        old_run = self._run
        self._run = np.zeros(capacity // 2 + 2, np.int32)
        self._run[: len(old_run)] = old_run

    # -- processing ------------------------------------------------------

    def process_to(self, count: int) -> None:
        """Ensure curling numbers are known for all prefixes shorter than
        ``count`` terms, without appending anything (transform mode)."""
        stop = min(count, self._filled)
        if stop > self._pos:
            curl_step_range(
                self._a, self._raw, self._pmin, self._run, self._pos, stop, 0, False
            )
            self._pos = stop

    def generate_to(self, count: int) -> None:
        """Extend the word to ``count`` terms with ``max(floor, k)``."""
        if self.floor is None:
            raise ValueError("engine has no generation floor")
        if count <= self._filled:
            self.process_to(count)
            return
        self._grow(count)
        self.process_to(self._filled)
        curl_step_range(
            self._a, self._raw, self._pmin, self._run,
            self._pos, count, self.floor, True,
        )
        self._pos = count
        self._filled = count

    # -- views -----------------------------------------------------------

    @property
    def filled(self) -> int:
        return self._filled

    def values(self, count: int | None = None) -> np.ndarray:
        count = self._filled if count is None else count
        return self._a[:count]

    def raw_curling(self, count: int | None = None) -> np.ndarray:
        """raw_curling()[i] is the curling number of the first i terms
        (entry 0 is unused)."""
        count = self._filled if count is None else count
        self.process_to(count)
        return self._raw[:count]

    def min_periods(self, count: int | None = None) -> np.ndarray:
        count = self._filled if count is None else count
        self.process_to(count)
        return self._pmin[:count]
