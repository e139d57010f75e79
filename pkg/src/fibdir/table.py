"""Vectorised Zeckendorf data for n = 0..N, used by the series code.

The greedy expansion runs column-wise over a numpy array, so a table for
N = 10**6 costs a few dozen array passes.  delta'(n) is accumulated from its
own geometric digit series (smallest terms first), which keeps it accurate to
a few ulp even when n is large.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

__all__ = ["SequenceTable", "sequence_table", "BETA_F", "SQRT5_F"]

SQRT5_F = 5.0 ** 0.5
BETA_F = (1.0 + SQRT5_F) / 2.0


@dataclass(frozen=True)
class SequenceTable:
    """Arrays indexed by n (entry 0 is n = 0, where d and tz are -1)."""

    N: int
    bits: np.ndarray      # greedy Zeckendorf word, LSB-first bitmask
    tz: np.ndarray        # trailing zeros of the Zeckendorf word
    d: np.ndarray         # suffix class 0/1/2
    shift_down: np.ndarray  # sum eps_j F_{j+1}; delta(n) = ((2n - A) + (2A + n) beta)/5
    delta_prime: np.ndarray
    delta: np.ndarray

    def class_mask(self, cls: int) -> np.ndarray:
        return self.d == cls


@lru_cache(maxsize=4)
def sequence_table(N: int) -> SequenceTable:
    if N < 1:
        raise ValueError("N must be >= 1")
    fibs = [1, 2]  # F_{j+2}
    while fibs[-1] <= N:
        fibs.append(fibs[-1] + fibs[-2])
    n = np.arange(N + 1, dtype=np.int64)
    rem = n.copy()
    bits = np.zeros(N + 1, dtype=np.int64)
    tz = np.full(N + 1, -1, dtype=np.int16)
    shift_down = np.zeros(N + 1, dtype=np.int64)
    dprime = np.zeros(N + 1, dtype=np.float64)
    f_prev = {0: 1}
    for j in range(1, len(fibs)):
        f_prev[j] = fibs[j - 1]
    for j in range(len(fibs) - 1, -1, -1):
        take = rem >= fibs[j]
        if not take.any():
            continue
        rem[take] -= fibs[j]
        bits[take] |= 1 << j
        shift_down[take] += f_prev[j]
        dprime[take] += (-BETA_F) ** (-(j + 2)) / SQRT5_F
        tz[take] = j
    assert not rem.any()
    d = np.where(tz == 0, 0, np.where(tz % 2 == 1, 1, 2)).astype(np.int8)
    d[0] = -1
    delta = n.astype(np.float64) + dprime
    for arr in (bits, tz, d, shift_down, dprime, delta):
        arr.setflags(write=False)
    return SequenceTable(N, bits, tz, d, shift_down, dprime, delta)
