"""Small numeric helpers shared by the series evaluators."""

from __future__ import annotations

import math
from typing import Sequence

import mpmath

from .. import config

__all__ = [
    "as_complex",
    "binom_coeffs",
    "hurwitz_em",
    "pairwise_sum",
    "richardson",
    "working_prec",
]


def working_prec(prec: int | None) -> int:
    return config.get().precision_bits if prec is None else int(prec)


def as_complex(s) -> mpmath.mpc:
    """Coerce numbers and ``(re, im)`` pairs to mpc at the current precision."""
    if isinstance(s, tuple):
        return mpmath.mpc(mpmath.mpf(s[0]), mpmath.mpf(s[1]))
    if isinstance(s, str):
        return mpmath.mpc(mpmath.mpmathify(s))
    return mpmath.mpc(s)


def binom_coeffs(s, M: int) -> list:
    """``binom(-s, m)`` for m = 0..M via c_{m+1} = c_m (-s - m)/(m + 1)."""
    if M < 1:
        raise ValueError("M must be >= 1")
    s = as_complex(s)
    out = [mpmath.mpc(1)]
    c = out[0]
    for m in range(M):
        c = c * (-s - m) / (m + 1)
        out.append(c)
    return out


def pairwise_sum(values: Sequence):
    """Sum in a fixed balanced tree, so the result never depends on scheduling."""
    vals = list(values)
    if not vals:
        return 0.0
    while len(vals) > 1:
        nxt = [vals[i] + vals[i + 1] for i in range(0, len(vals) - 1, 2)]
        if len(vals) % 2:
            nxt.append(vals[-1])
        vals = nxt
    return vals[0]


def richardson(values: Sequence, ratio: float = 2.0, order: int = 1, step: int = 1):
    """Eliminate error terms ``c_k h**(order + step*k)`` from a refinement chain.

    ``values[i]`` is computed at step ``h / ratio**i``; the last entry of the
    final column is returned.
    """
    if len(values) < 1:
        raise ValueError("need at least one value")
    col = list(values)
    p = order
    while len(col) > 1:
        f = mpmath.mpf(ratio) ** p
        col = [(f * col[i + 1] - col[i]) / (f - 1) for i in range(len(col) - 1)]
        p += step
    return col[0]


def hurwitz_em(s, a, max_corrections: int = 400):
    """Hurwitz zeta ``sum_{k>=0} (a+k)**-s`` by Euler-Maclaurin, Re(s) > 1.

    The first terms are summed directly until the shifted start ``A`` exceeds
    ``|s|`` plus a precision-dependent margin; after that the Bernoulli
    corrections shrink at least like ``(|s| + 2j)**2/(2 pi A)**2`` per step.
    For large ``a`` no direct terms are needed, which keeps far tails cheap.
    """
    s = as_complex(s)
    a = mpmath.mpf(a)
    if a <= 0:
        raise ValueError("a must be positive")
    prec = mpmath.mp.prec
    need = float(abs(s)) + prec / 2.0 + 4
    M = max(0, math.ceil(need - float(a)))
    head = mpmath.fsum(mpmath.power(a + k, -s) for k in range(M))
    A = a + M
    Apow = mpmath.power(A, -s)
    total = head + A * Apow / (s - 1) + Apow / 2
    eps = mpmath.mpf(2) ** (-prec - 4)
    rising = s            # s (s+1) ... (s+2j-2)
    Ainv2 = 1 / (A * A)
    Ap = Apow / A         # A**(-s-2j+1) for j = 1
    fact = mpmath.mpf(2)  # (2j)!
    for j in range(1, max_corrections + 1):
        term = mpmath.bernoulli(2 * j) / fact * rising * Ap
        total += term
        if abs(term) <= eps * abs(total):
            return total
        rising *= (s + 2 * j - 1) * (s + 2 * j)
        Ap *= Ainv2
        fact *= (2 * j + 1) * (2 * j + 2)
    raise ArithmeticError("Euler-Maclaurin corrections did not settle")
