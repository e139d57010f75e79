"""Riemann zeta reference and the binomial relation between zeta and F.

Writing ``n = delta(n) - delta'(n)`` and expanding ``n**-s`` binomially gives

    zeta(s) - F(s) = sum_{m>=1} binom(-s, m) sum_n (-delta'(n))**m delta(n)**(-s-m).

zeta_relation_check evaluates both sides independently and reports the gap.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import mpmath
import numpy as np

from ..errors import DomainError
from ..sequences import delta_exact
from ..table import sequence_table
from .numerics import as_complex, binom_coeffs, hurwitz_em, working_prec
from .series import HEAD, SeriesId, _tail_stats, direct_sum

__all__ = ["zeta_ref", "ZetaRelation", "zeta_relation_sides", "zeta_relation_check"]


def zeta_ref(s, prec: int | None = None):
    """Riemann zeta for Re(s) > 1: direct terms plus Euler-Maclaurin corrections."""
    prec = working_prec(prec)
    with mpmath.workprec(prec + 12):
        s = as_complex(s)
        if s.real <= 1:
            raise DomainError("zeta_ref needs Re(s) > 1")
        value = hurwitz_em(s, 1)
    with mpmath.workprec(prec):
        return +value


@dataclass(frozen=True)
class ZetaRelation:
    s: mpmath.mpc
    M: int
    N: int
    lhs: mpmath.mpc         # zeta(s) - F(s)
    rhs: mpmath.mpc         # truncated double sum
    difference: mpmath.mpf
    lhs_error: mpmath.mpf
    inner_sums: tuple       # sum_n (-delta')**m delta**(-s-m), m = 1..M


def zeta_relation_sides(s, M: int, N: int, prec: int | None = None) -> ZetaRelation:
    """Both sides of the zeta relation, the right one truncated at m <= M."""
    if M < 1 or N < 10:
        raise DomainError("need M >= 1 and N >= 10")
    prec = working_prec(prec)
    with mpmath.workprec(prec + 12):
        s = as_complex(s)
        if s.real <= 1:
            raise DomainError("the relation is checked for Re(s) > 1")
        fs = direct_sum(SeriesId.F, s, N=N, prec=prec)
        lhs = zeta_ref(s, prec) - fs.value

        head_n = min(HEAD, N)
        inner = [mpmath.mpc(0)] * (M + 1)
        for n in range(1, head_n + 1):
            pair = delta_exact(n)
            dl = pair.delta.to_mpf()
            r = (-pair.delta_prime / pair.delta).to_mpf()
            t = mpmath.power(dl, -s)
            for m in range(1, M + 1):
                t *= r
                inner[m] += t

        if N > head_n:
            tab = sequence_table(N)
            dl = tab.delta[head_n + 1 : N + 1]
            r = -tab.delta_prime[head_n + 1 : N + 1] / dl
            sc = complex(s)
            base = np.exp(-sc * np.log(dl))
            for m in range(1, M + 1):
                base = base * r
                inner[m] += mpmath.mpc(complex(base.sum()))

        # moment tails for the two leading orders; higher ones are below N**(-s-2)
        st = _tail_stats(SeriesId.F, N, N)
        inner[1] += -st.mu1 * hurwitz_em(s + 1, N + 1)
        if M >= 2:
            inner[2] += st.mu2 * hurwitz_em(s + 2, N + 1)

        coeffs = binom_coeffs(s, M)
        rhs = mpmath.fsum(coeffs[m] * inner[m] for m in range(1, M + 1))
        diff = abs(lhs - rhs)
    with mpmath.workprec(prec):
        return ZetaRelation(+s, M, N, +lhs, +rhs, +diff, fs.error_bound,
                            tuple(+v for v in inner[1:]))


def zeta_relation_check(s, M: int, N: int, tol: float = 1e-6, prec: int | None = None):
    """Report entry comparing zeta(s) - F(s) with the truncated double sum."""
    from ..verification.report import ReportEntry

    t0 = time.perf_counter()
    rel = zeta_relation_sides(s, M, N, prec)
    return ReportEntry(
        check_id=f"zeta_relation[s={mpmath.nstr(rel.s, 8)},M={M},N={N}]",
        paper_anchor="zeta(s) - F(s) = sum_m binom(-s,m) sum_n (-delta')^m delta^(-s-m)",
        status="pass" if rel.difference < tol else "fail",
        measured=rel.difference,
        expected=0,
        tolerance=tol,
        runtime=time.perf_counter() - t0,
        detail={"lhs": str(rel.lhs), "rhs": str(rel.rhs)},
    )
