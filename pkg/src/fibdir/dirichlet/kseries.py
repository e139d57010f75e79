"""Difference series K, and the functions P and Q built from them.

For a class X in {G, I, J, F} (i = 0, 1, 2, 3) and constants a > 0, |b| <= a,

    K_{a,b}(s) = sum_n (a x_n)**-s - (a x_n + b)**-s
               = s a**-s (b/a) X(s+1) - a**-s sum_{m>=2} binom(-s,m) (b/a)**m X(s+m).

The m = 1 term carries the pole of X at 1, which s cancels: at s = 0 the
value is (b/a) times the residue of X.
"""

from __future__ import annotations

import mpmath

from .. import config
from ..errors import DomainError, NoConvergence
from ..golden import BETA, SQRT5, GoldenNum, beta_pow
from ..sequences import delta_exact
from .continuation import M_MAX, _f_bound, series_value
from .numerics import as_complex, working_prec
from .series import RESIDUE, EvalResult, SeriesId

__all__ = ["k_eval", "p_eval", "q_eval", "K_CLASSES", "LAURENT_RADIUS"]

K_CLASSES = {0: SeriesId.G, 1: SeriesId.I, 2: SeriesId.J, 3: SeriesId.F}
LAURENT_RADIUS = 1e-6
_LAURENT_STEP = 1e-3


def _golden(v) -> GoldenNum:
    if isinstance(v, GoldenNum):
        return v
    if isinstance(v, str):
        return GoldenNum.parse(v)
    return GoldenNum(v)


def _shifted_pole_term(X: SeriesId, s, tol, N, prec):
    """``s * X(1 + s)``, regular at s = 0."""
    rho = RESIDUE[X].to_mpf()
    if s == 0:
        return mpmath.mpc(rho), mpmath.mpf(0)
    if abs(s) >= LAURENT_RADIUS:
        r = series_value(X, 1 + s, tol=tol, N=N, prec=prec)
        return s * r.value, abs(s) * r.error_bound
    # quadratic interpolation through g(0) = rho and g(+-h)
    h = mpmath.mpf(_LAURENT_STEP)
    gp = h * series_value(X, 1 + h, tol=tol, N=N, prec=prec).value
    gm = -h * series_value(X, 1 - h, tol=tol, N=N, prec=prec).value
    c1 = (gp - gm) / (2 * h)
    c2 = (gp + gm - 2 * rho) / (2 * h * h)
    value = rho + c1 * s + c2 * s * s
    # next Taylor term is O(h**2 |s|) in c1 and O(|s|**3) overall
    return value, abs(c2) * h * h * abs(s) * 4 + tol


def k_eval(i: int, a, b, s, tol: float | None = None, N: int | None = None,
           prec: int | None = None) -> EvalResult:
    """K^(i)_{a,b}(s) for Re(s) > -1."""
    if i not in K_CLASSES:
        raise DomainError(f"class index must be 0..3, got {i!r}")
    a, b = _golden(a), _golden(b)
    if a.sign() <= 0:
        raise DomainError("a must be positive")
    if abs(b) > abs(a):
        raise DomainError("|b| must not exceed |a|")
    X = K_CLASSES[i]
    tol = config.get().tol if tol is None else float(tol)
    prec = working_prec(prec)
    with mpmath.workprec(prec + 12):
        s = as_complex(s)
        if s.real <= -1:
            raise DomainError("K is evaluated for Re(s) > -1")
        if not b:
            return EvalResult(mpmath.mpc(0), mpmath.mpf(0), 0, "k_series", 0)
        a_f = a.to_mpf(prec + 12)
        ratio = (b / a).to_mpf(prec + 12)
        a_pow = mpmath.power(a_f, -s)
        g, g_err = _shifted_pole_term(X, s, tol / 4, N, prec)
        total = a_pow * ratio * g
        err = abs(a_pow * ratio) * g_err
        coeff = -s * ratio  # binom(-s, 1) (b/a)
        q_ratio = abs(ratio)
        terms_used = 0
        for m in range(2, M_MAX + 1):
            coeff = coeff * (-s - m + 1) / m * ratio
            weight = abs(a_pow * coeff)
            inner = float(tol / (4 * max(weight, mpmath.mpf(2) ** -(prec - 8)))) / 2**m
            inner = min(max(inner, 2.0 ** -(prec - 12)), 1e-2)
            xm = series_value(X, s + m, tol=inner, N=N, prec=prec)
            terms_used = max(terms_used, xm.terms_used)
            total -= a_pow * coeff * xm.value
            err += weight * xm.error_bound
            q = q_ratio * abs(s + m + 1) / (m + 1)
            if m > abs(s) + 2 and q < 1:
                tail = weight * _f_bound(s.real + m + 1) * q / (1 - q)
                if tail < tol / 2:
                    err += tail
                    break
        else:
            raise NoConvergence(f"K series not settled by m = {M_MAX}")
    with mpmath.workprec(prec):
        return EvalResult(+total, err, terms_used, "k_series", m)


_B_OVER_SQRT5 = BETA * SQRT5 / 5           # beta/sqrt5
_B2_OVER_SQRT5 = beta_pow(2) * SQRT5 / 5   # beta**2/sqrt5


def p_eval(s, tol: float | None = None, N: int | None = None, prec: int | None = None) -> EvalResult:
    """P(s) = (1 - beta**-s) K^(0)_{1, beta/sqrt5}(s); P(0) = 0."""
    prec = working_prec(prec)
    with mpmath.workprec(prec + 12):
        s = as_complex(s)
        k = k_eval(0, 1, _B_OVER_SQRT5, s, tol=tol, N=N, prec=prec)
        factor = 1 - mpmath.power(mpmath.phi, -s)
        value = factor * k.value
        err = abs(factor) * k.error_bound
    with mpmath.workprec(prec):
        return EvalResult(+value, err, k.terms_used, "p_series", k.truncation_m)


def q_eval(s, tol: float | None = None, N: int | None = None, prec: int | None = None) -> EvalResult:
    """Q(s) = (1 - beta**-s) K^(3)_{beta, beta**2/sqrt5}(s) - delta(1)**-s + delta(2)**-s."""
    prec = working_prec(prec)
    with mpmath.workprec(prec + 12):
        s = as_complex(s)
        k = k_eval(3, BETA, _B2_OVER_SQRT5, s, tol=tol, N=N, prec=prec)
        factor = 1 - mpmath.power(mpmath.phi, -s)
        d1 = delta_exact(1).delta.to_mpf()
        d2 = delta_exact(2).delta.to_mpf()
        value = factor * k.value - mpmath.power(d1, -s) + mpmath.power(d2, -s)
        err = abs(factor) * k.error_bound
    with mpmath.workprec(prec):
        return EvalResult(+value, err, k.terms_used, "q_series", k.truncation_m)
