"""Direct summation of F, G, H, I, J with an analytic tail.

A sum over ``n <= N`` is split in three parts:

* head (``n <= HEAD``): exact arguments rendered at working precision;
* bulk: float64 terms in fixed-size chunks, combined in a fixed pairwise
  order (identical results for any thread count);
* tail (``n > N``): with ``x_n = n + u_n`` and class density ``rho``,
  ``sum x_n**-s ~ rho * sum_k binom(-s,k) mean(u**k) zeta(s+k, N+1)`` plus a
  boundary term for the class counting discrepancy.

The bulk is summed in double precision; its rounding error is bounded
relative to the bulk magnitude, which for ``n > HEAD`` is small.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import mpmath
import numpy as np

from .. import config
from ..errors import DomainError, PrecisionError
from ..golden import BETA, SQRT5, GoldenNum, beta_pow
from ..sequences import delta_exact
from ..table import BETA_F, SQRT5_F, sequence_table
from .numerics import as_complex, hurwitz_em, pairwise_sum, working_prec

__all__ = [
    "SeriesId",
    "EvalResult",
    "direct_sum",
    "RESIDUE",
    "DENSITY",
    "first_argument",
    "HEAD",
    "CHUNK",
]

HEAD = 512
CHUNK = 1 << 16
GUARD_BITS = 12
_EPS = 2.0 ** -52


class SeriesId(str, Enum):
    F = "F"
    G = "G"
    H = "H"
    I = "I"  # noqa: E741
    J = "J"


_CLASS = {SeriesId.F: None, SeriesId.H: None, SeriesId.G: 0, SeriesId.I: 1, SeriesId.J: 2}

# Residues at s = 1; also the index density of each class (H counts every n).
RESIDUE = {
    SeriesId.F: GoldenNum(1, 0),
    SeriesId.G: GoldenNum(2, -1),   # 1 - 1/beta
    SeriesId.H: GoldenNum(-1, 1),   # 1/beta
    SeriesId.I: GoldenNum(2, -1),   # 1 - 1/beta
    SeriesId.J: GoldenNum(-3, 2),   # 1/beta - 1/beta**2
}
DENSITY = {
    SeriesId.F: GoldenNum(1, 0),
    SeriesId.H: GoldenNum(1, 0),
    SeriesId.G: GoldenNum(2, -1),
    SeriesId.I: GoldenNum(2, -1),
    SeriesId.J: GoldenNum(-3, 2),
}

_H_SHIFT = beta_pow(2) * SQRT5 / 5          # beta**2/sqrt5
_H_OFFSET_F = BETA_F / SQRT5_F              # beta/sqrt5


@dataclass(frozen=True)
class EvalResult:
    value: mpmath.mpc
    error_bound: mpmath.mpf
    terms_used: int
    method: str
    truncation_m: int = 0

    def as_dict(self, digits: int = 30) -> dict:
        v = mpmath.mpc(self.value)
        return {
            "value": {"re": mpmath.nstr(v.real, digits), "im": mpmath.nstr(v.imag, digits)},
            "error_bound": mpmath.nstr(self.error_bound, 6),
            "terms_used": self.terms_used,
            "method": self.method,
            "truncation_m": self.truncation_m,
        }


def _exact_argument(sid: SeriesId, n: int) -> GoldenNum:
    dl = delta_exact(n).delta
    if sid is SeriesId.H:
        return BETA * dl + _H_SHIFT
    return dl


def first_argument(sid: SeriesId) -> GoldenNum:
    """Smallest argument in the series (used for geometric ratio bounds)."""
    cls = _CLASS[sid]
    n = 1 if cls is None else {0: 1, 1: 2, 2: 3}[cls]
    return _exact_argument(sid, n)


def _in_class(sid: SeriesId, n: int, d_values) -> bool:
    cls = _CLASS[sid]
    return cls is None or d_values[n] == cls


@lru_cache(maxsize=64)
def _head_logs(sid: SeriesId, prec: int) -> tuple:
    """``(n, log x_n)`` for class members n <= HEAD at precision ``prec``."""
    tab = sequence_table(HEAD)
    out = []
    with mpmath.workprec(prec):
        for n in range(1, HEAD + 1):
            if _in_class(sid, n, tab.d):
                out.append((n, mpmath.log(_exact_argument(sid, n).to_mpf(prec))))
    return tuple(out)


@dataclass(frozen=True)
class _Bulk:
    n: np.ndarray
    lnx: np.ndarray


@lru_cache(maxsize=16)
def _bulk(sid: SeriesId, N: int) -> _Bulk:
    tab = sequence_table(N)
    idx = np.arange(HEAD + 1, N + 1, dtype=np.int64)
    cls = _CLASS[sid]
    if cls is not None:
        idx = idx[tab.d[HEAD + 1 :] == cls]
    x = tab.delta[idx]
    if sid is SeriesId.H:
        x = BETA_F * (x + _H_OFFSET_F)
    lnx = np.log(x)
    for a in (idx, lnx):
        a.setflags(write=False)
    return _Bulk(idx, lnx)


@dataclass(frozen=True)
class _TailStats:
    rho: float
    mu1: float
    mu2: float
    u_max: float
    disc_mean: float      # long-run mean of E(n) = #class(<= n) - rho*n
    disc_at_N: float
    disc_dev: float       # max |partial sum of E(n) - disc_mean| on the window
    offset_dev: float     # max |partial sum of (u - mu1)| on the window


@lru_cache(maxsize=256)
def _tail_stats(sid: SeriesId, N: int, N_table: int) -> _TailStats:
    tab = sequence_table(N_table)
    lo = max(N // 2, 1)
    n = np.arange(lo + 1, N + 1, dtype=np.int64)
    u = tab.delta_prime[lo + 1 : N + 1]
    rho = float(DENSITY[sid])
    cls = _CLASS[sid]
    if cls is not None:
        member = tab.d[lo + 1 : N + 1] == cls
        count_lo = int(np.count_nonzero(tab.d[1 : lo + 1] == cls))
        E = count_lo + np.cumsum(member) - rho * n
        u = u[member]
        disc_mean = float(E.mean())
        disc_at_N = float(E[-1])
        disc_dev = float(np.max(np.abs(np.cumsum(E - disc_mean))))
    else:
        disc_mean = disc_at_N = disc_dev = 0.0
    if sid is SeriesId.H:
        u = u + _H_OFFSET_F
    mu1 = float(u.mean()) if u.size else 0.0
    mu2 = float((u * u).mean()) if u.size else 0.0
    offset_dev = float(np.max(np.abs(np.cumsum(u - mu1)))) if u.size else 0.0
    u_max = float(np.max(np.abs(u))) if u.size else 1.0
    return _TailStats(rho, mu1, mu2, u_max, disc_mean, disc_at_N, disc_dev, offset_dev)


def _tail_bound(sid: SeriesId, s, N: int, st: _TailStats) -> float:
    sigma = float(s.real)
    abs_s = float(abs(s))
    b3 = abs_s * (abs_s + 1) * (abs_s + 2) / 6
    # both fluctuating parts are summed by parts twice against n**(-s-1)
    damp = abs_s * (1 + (abs_s + 1) / (sigma + 1)) * N ** (-sigma - 1)
    bound = (
        (st.disc_dev + st.offset_dev + 1.0) * damp
        + b3 * st.u_max**3 * st.rho * N ** (-sigma - 2) / (sigma + 2)
    )
    if sid is SeriesId.H:
        bound *= BETA_F ** -sigma
    return 2.0 * bound


def _tail_value(sid: SeriesId, s, N: int, st: _TailStats):
    a = N + 1
    z0 = hurwitz_em(s, a)
    z1 = hurwitz_em(s + 1, a)
    z2 = hurwitz_em(s + 2, a)
    main = z0 - s * st.mu1 * z1 + s * (s + 1) / 2 * st.mu2 * z2
    value = st.rho * main
    if st.disc_at_N != st.disc_mean:
        value += (mpmath.mpf(st.disc_mean) - st.disc_at_N) * mpmath.power(N + 1 + st.mu1, -s)
    if sid is SeriesId.H:
        value *= mpmath.power(BETA.to_mpf(), -s)
    return value


def _head_sum(sid: SeriesId, s, n_cut: int, wp: int):
    return mpmath.fsum(mpmath.exp(-s * L) for n, L in _head_logs(sid, wp) if n <= n_cut)


def _chunk_sum(args):
    lnx, s = args
    terms = np.exp(-s * lnx)
    return complex(terms.real.sum(), terms.imag.sum())


def _bulk_sum(lnx: np.ndarray, s: complex, threads: int) -> complex:
    chunks = [(lnx[i : i + CHUNK], s) for i in range(0, lnx.size, CHUNK)]
    if not chunks:
        return 0j
    if threads > 1 and len(chunks) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            partials = list(pool.map(_chunk_sum, chunks))
    else:
        partials = [_chunk_sum(c) for c in chunks]
    return pairwise_sum(partials)


_OFFSET_MIN = 1 / (BETA_F * SQRT5_F)   # delta(n) >= n - 1/(beta sqrt5)


def _short_cutoff(sigma: float, tol: float | None) -> int | None:
    """Smallest n0 with sum_{n > n0} (n - c)**-sigma <= tol/8 by the integral bound."""
    if tol is None:
        return None
    n0 = _OFFSET_MIN + (tol / 8 * (sigma - 1)) ** (1 / (1 - sigma))
    if not math.isfinite(n0) or n0 > HEAD:
        return None
    return max(int(math.ceil(n0)), 1)


def _choose_cutoff(sid: SeriesId, s, N: int, tol: float | None) -> int:
    if tol is None or N <= 2 * HEAD:
        return N
    cand = 2 * HEAD
    while cand < N:
        if _tail_bound(sid, s, cand, _tail_stats(sid, cand, N)) <= tol / 4:
            return cand
        cand *= 2
    return N


def direct_sum(sid, s, N: int | None = None, tol: float | None = None,
               prec: int | None = None, threads: int | None = None) -> EvalResult:
    """Sum the series over ``n <= N`` and add the analytic tail.

    With ``tol`` given, the cutoff is lowered (never raised): for large Re(s)
    to the point where an integral bound covers every remaining term, else to
    the first power-of-two multiple of the head size whose tail bound is
    below tol/4.
    """
    sid = SeriesId(sid)
    prec = working_prec(prec)
    settings = config.get()
    N = settings.terms if N is None else int(N)
    threads = settings.threads if threads is None else int(threads)
    if N < 10:
        raise DomainError("N must be >= 10")
    if tol is not None and tol < 2.0 ** (-(prec - 4)):
        raise PrecisionError(f"tol={tol:g} is below the {prec}-bit working precision")
    wp = prec + GUARD_BITS
    with mpmath.workprec(wp):
        s = as_complex(s)
        if s.real <= 1:
            raise DomainError(f"direct summation needs Re(s) > 1, got {mpmath.nstr(s, 8)}")
        sigma = float(s.real)
        short = _short_cutoff(sigma, tol)
        if short is not None and short <= N:
            # every term past `short` is covered by an integral bound below tol/8
            n_cut = short
            total = _head_sum(sid, s, n_cut, wp)
            err = (n_cut - _OFFSET_MIN) ** (1 - sigma) / (sigma - 1)
        else:
            n_cut = _choose_cutoff(sid, s, N, tol)
            total = _head_sum(sid, s, n_cut, wp)
            err = 0.0
            if n_cut > HEAD:
                blk = _bulk(sid, N)
                stop = int(np.searchsorted(blk.n, n_cut, side="right"))
                lnx = blk.lnx[:stop]
                bulk = _bulk_sum(lnx, complex(s), threads)
                total += mpmath.mpc(bulk.real, bulk.imag)
                n_chunks = max(1, -(-lnx.size // CHUNK))
                bulk_abs = (HEAD - 0.5) ** (1 - sigma) / (sigma - 1)
                err += _EPS * (abs(complex(s)) * math.log(n_cut + 2) + 20 + n_chunks) * bulk_abs
            st = _tail_stats(sid, n_cut, N)
            total += _tail_value(sid, s, n_cut, st)
            err += _tail_bound(sid, s, n_cut, st)
        err += min(n_cut, HEAD) * 2.0 ** (-(wp - 4))
    with mpmath.workprec(prec):
        return EvalResult(+total, mpmath.mpf(err), n_cut, "direct")
