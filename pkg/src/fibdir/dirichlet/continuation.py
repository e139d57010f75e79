"""Meromorphic continuation of F and the derived series G, H, I, J.

Splitting F by the last Zeckendorf digits and expanding each shifted term
binomially gives

    D(s) F(s) = (z - z**3) * sum_{m>=1} (beta/sqrt5)**m binom(-s, m) F(s+m)
                + (1 - z**2) * delta(1)**-s,

with ``z = beta**-s`` and ``D(s) = 1 - 2z + z**3``.  The right-hand side only
needs F at ``s + 1, s + 2, ...``, so F is defined wherever ``D(s) != 0`` by
recursing until the real part reaches the direct-summation base.

The other series follow from F without further sums:

    G = (1 - z) F,   I = z F / (1 + z),   J = z**2 F / (1 + z),
    H = F / (1 + z) - delta(1)**-s.
"""

from __future__ import annotations

import threading

import mpmath

from .. import config
from ..errors import DomainError, NoConvergence, PoleProximity
from ..sequences import delta_exact
from .numerics import as_complex, richardson, working_prec
from .poles import nearest_pole
from .series import EvalResult, SeriesId, direct_sum

__all__ = ["continue_F", "series_value", "residue_at", "POLE_THRESHOLD", "M_MAX", "clear_memo"]

POLE_THRESHOLD = 1e-6
M_MAX = 200

_memo: dict = {}
_memo_lock = threading.Lock()


def clear_memo() -> None:
    with _memo_lock:
        _memo.clear()


def _delta1():
    return delta_exact(1).delta.to_mpf()


def _f_bound(x):
    """Upper bound for F(x), x > 1, from delta(n) >= n - 1/(beta sqrt5)."""
    a = mpmath.mpf(1) + 1 / (mpmath.phi * mpmath.sqrt(5))
    return _delta1() ** -x + a**-x + a ** (1 - x) / (x - 1)


def _key(s, *rest):
    return (mpmath.nstr(s.real, 40), mpmath.nstr(s.imag, 40)) + rest


def _eval_F(s, tol, base, N, prec, top: bool) -> EvalResult:
    if not top and s.real >= base:
        key = _key(s, "direct", tol, N, prec)
        hit = _memo.get(key)
        if hit is None:
            hit = direct_sum(SeriesId.F, s, N=N, tol=tol, prec=prec)
            with _memo_lock:
                _memo[key] = hit
        return hit
    key = _key(s, "eq", tol, base, N, prec)
    hit = _memo.get(key)
    if hit is None:
        hit = _continued(s, tol, base, N, prec)
        with _memo_lock:
            _memo[key] = hit
    return hit


def _continued(s, tol, base, N, prec) -> EvalResult:
    z = mpmath.power(mpmath.phi, -s)
    D = 1 - 2 * z + z**3
    if abs(D) < POLE_THRESHOLD:
        raise PoleProximity(abs(D), mpmath.nstr(s, 12))
    ratio = mpmath.phi / mpmath.sqrt(5)
    pref = z - z**3
    floor = 2.0 ** -(prec - 8)
    total = mpmath.mpc(0)
    err = mpmath.mpf(0)
    coeff = mpmath.mpc(1)   # ratio**m * binom(-s, m)
    for m in range(1, M_MAX + 1):
        coeff = coeff * ratio * (-s - m + 1) / m
        weight = abs(pref * coeff)
        # error budget for F(s+m): tol/4 overall, halving with m
        inner = float(tol * abs(D) / (4 * max(weight, mpmath.mpf(floor)))) / 2**m
        inner = min(max(inner, floor * 16), 1e-2)
        fm = _eval_F(s + m, inner, base, N, prec, top=False)
        total += pref * coeff * fm.value
        err += weight * fm.error_bound
        q = ratio * abs(s + m + 1) / (m + 2)
        if m > abs(s.imag) + 2 and q < 1:
            tail = weight * _f_bound(s.real + m + 1) * q / (1 - q) / abs(D)
            if tail < tol * (1 - ratio) / 2:
                break
    else:
        raise NoConvergence(f"binomial series not settled by m = {M_MAX} at s = {mpmath.nstr(s, 12)}")
    value = (total + (1 - z**2) * mpmath.power(_delta1(), -s)) / D
    bound = err / abs(D) + tail + mpmath.mpf(2) ** -(prec - 4) * m
    return EvalResult(value, bound, N, "continuation", m)


def continue_F(s, tol: float | None = None, base: float = 2.0, N: int | None = None,
               prec: int | None = None) -> EvalResult:
    """F(s) from the shifted relation, for any s off the zero set of D.

    The relation is applied at the top level even when Re(s) is large, so the
    result is always a genuine continuation value; arguments ``s + m`` with
    real part at least ``base`` are summed directly.
    """
    settings = config.get()
    tol = settings.tol if tol is None else float(tol)
    N = settings.terms if N is None else int(N)
    prec = working_prec(prec)
    if base <= 1:
        raise DomainError("recursion base must exceed 1")
    if tol <= 0:
        raise DomainError("tol must be positive")
    with mpmath.workprec(prec + 12):
        s = as_complex(s)
        res = _eval_F(s, tol, float(base), N, prec, top=True)
    with mpmath.workprec(prec):
        return EvalResult(+res.value, res.error_bound, res.terms_used, res.method, res.truncation_m)


def series_value(sid, s, tol: float | None = None, base: float = 2.0, N: int | None = None,
                 prec: int | None = None) -> EvalResult:
    """X(s) for X in F, G, H, I, J: direct when Re(s) >= base, else via F."""
    sid = SeriesId(sid)
    settings = config.get()
    tol = settings.tol if tol is None else float(tol)
    prec = working_prec(prec)
    with mpmath.workprec(prec + 12):
        s = as_complex(s)
        if s.real >= base:
            return direct_sum(sid, s, N=N, tol=tol, prec=prec)
        fr = continue_F(s, tol=tol / 4, base=base, N=N, prec=prec)
        if sid is SeriesId.F:
            return fr
        z = mpmath.power(mpmath.phi, -s)
        shift = mpmath.mpc(0)
        if sid is SeriesId.G:
            factor = 1 - z
        else:
            if abs(1 + z) < POLE_THRESHOLD:
                raise PoleProximity(abs(1 + z), mpmath.nstr(s, 12), quantity="|1 + beta^-s|")
            factor = {SeriesId.I: z, SeriesId.J: z**2, SeriesId.H: mpmath.mpc(1)}[sid] / (1 + z)
            if sid is SeriesId.H:
                shift = -mpmath.power(_delta1(), -s)
        value = factor * fr.value + shift
        bound = abs(factor) * fr.error_bound + mpmath.mpf(2) ** -(prec - 4)
    with mpmath.workprec(prec):
        return EvalResult(+value, bound, fr.terms_used, "continuation", fr.truncation_m)


def residue_at(sid, s0, eps: float = 1e-3, tol: float = 1e-10, extrapolate: bool = True,
               N: int | None = None, prec: int | None = None):
    """Estimate the residue of X at a lattice point from ``eps * X(s0 + eps)``.

    With ``extrapolate`` the values at eps and eps/2 are combined to cancel
    the O(eps) term.
    """
    prec = working_prec(prec)
    with mpmath.workprec(prec + 12):
        s0 = as_complex(s0)
        _, dist = nearest_pole(s0)
        if dist > 1e-10:
            raise DomainError(f"s0 = {mpmath.nstr(s0, 12)} is not on the pole lattice")
        if eps <= 0:
            raise DomainError("eps must be positive")

        def R(e):
            e = mpmath.mpf(e)
            return e * series_value(sid, s0 + e, tol=tol, N=N, prec=prec).value

        if not extrapolate:
            out = R(eps)
        else:
            out = richardson([R(eps), R(mpmath.mpf(eps) / 2)], ratio=2, order=1)
    with mpmath.workprec(prec):
        return +out
