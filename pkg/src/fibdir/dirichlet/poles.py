"""Zeros of ``D(s) = 1 - 2 beta**-s + beta**-3s``.

With ``z = beta**-s`` the polynomial ``z**3 - 2z + 1`` factors as
``(z - 1)(z**2 + z - 1)``, so the zeros lie on three vertical lines:

* ``z = 1``:        ``s = 2 pi i k / ln beta``
* ``z = 1/beta``:   ``s = 1 + 2 pi i k / ln beta``
* ``z = -beta``:    ``s = -1 + (2k + 1) pi i / ln beta``
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath

from .numerics import as_complex, working_prec

__all__ = ["PolePoint", "pole_zeros", "denominator", "nearest_pole", "LINES"]

LINES = ("z=1", "z=1/beta", "z=-beta")


@dataclass(frozen=True)
class PolePoint:
    line: str
    k: int
    s: mpmath.mpc
    residual: mpmath.mpf


def _lnbeta():
    return mpmath.log(mpmath.phi)


def denominator(s):
    z = mpmath.power(mpmath.phi, -as_complex(s))
    return 1 - 2 * z + z**3


def _closed_form(line: int, k: int):
    period = 2 * mpmath.pi / _lnbeta()
    if line == 0:
        return mpmath.mpc(0, k * period)
    if line == 1:
        return mpmath.mpc(1, k * period)
    return mpmath.mpc(-1, (2 * k + 1) * mpmath.pi / _lnbeta())


def _polish(s, steps: int = 3):
    lb = _lnbeta()
    for _ in range(steps):
        z = mpmath.power(mpmath.phi, -s)
        f = 1 - 2 * z + z**3
        df = (3 * z**2 - 2) * (-lb * z)
        if df == 0 or f == 0:
            break
        s = s - f / df
    return s


def pole_zeros(k_min: int, k_max: int, prec: int | None = None) -> list[PolePoint]:
    """Lattice points for ``k_min <= k <= k_max`` on all three lines."""
    if k_min > k_max:
        raise ValueError("empty k range")
    prec = working_prec(prec)
    out = []
    with mpmath.workprec(prec):
        for line, name in enumerate(LINES):
            for k in range(k_min, k_max + 1):
                s = _closed_form(line, k)
                if not (line == 1 and k == 0):  # s = 1 is already exact
                    s = _polish(s)
                out.append(PolePoint(name, k, +s, abs(denominator(s))))
    return out


def nearest_pole(s) -> tuple[mpmath.mpc, mpmath.mpf]:
    """Closest lattice point to ``s`` and its distance."""
    s = as_complex(s)
    lb = _lnbeta()
    period = 2 * mpmath.pi / lb
    best = None
    for line in range(3):
        if line == 2:
            k0 = int(mpmath.nint((s.imag * lb / mpmath.pi - 1) / 2))
        else:
            k0 = int(mpmath.nint(s.imag / period))
        for k in (k0 - 1, k0, k0 + 1):
            p = _closed_form(line, k)
            dist = abs(s - p)
            if best is None or dist < best[1]:
                best = (p, dist)
    return best
