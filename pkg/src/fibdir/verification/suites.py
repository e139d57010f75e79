"""Batch identity suites.

Each suite turns a family of claims into concrete checks and returns a
Report.  Exact claims are checked over whole ranges with integer arrays; a
slice of each range is re-checked through the scalar GoldenNum API so both
code paths stay covered.

Relations that fail in their literal form are reported twice: once as
written (expected to fail) and once with the missing term restored.
"""

from __future__ import annotations

import time

import mpmath
import numpy as np

from .. import config
from ..errors import ConfigError, PoleProximity
from ..golden import BETA, SQRT5, GoldenNum, gr_sign
from ..sequences import (
    d_stream,
    delta_exact,
    fib_word_stream,
    frac_beta,
    frac_beta_direct,
    seq_term,
)
from ..table import sequence_table
from ..zeckendorf import _advance, tau_shift, zeck_decode, zeck_encode, zeck_successor
from ..dirichlet import (
    RESIDUE,
    SeriesId,
    binom_coeffs,
    continue_F,
    direct_sum,
    k_eval,
    p_eval,
    pole_zeros,
    q_eval,
    residue_at,
    zeta_relation_sides,
)
from ..dirichlet.kseries import K_CLASSES
from .report import Report
from .theorem2 import closed_forms, theorem2_sums

__all__ = ["run_suite", "SUITES", "DEFAULTS"]

DEFAULTS = {
    "arithmetic": {"n_max": 10**5},
    "sequences": {"n_max": 10**6},
    "sets": {"n_max": 10**5},
    "functional_equations": {"terms": 10**6, "tol": 1e-6},
    "residues": {"tol": 1e-2},
    "theorem2": {"n_max": 10**6, "tol": 1e-4},
    "poles": {},
    "zeta_relation": {"terms": 10**6, "tol": 1e-6},
    "k_limits": {"tol": 1e-3},
    "continuation": {"tol": 1e-8},
}

PROBES = (mpmath.mpf(2), mpmath.mpf("2.5"), mpmath.mpf(3), mpmath.mpc(2, 1), mpmath.mpc("2.5", 2))
CONTINUATION_PROBES = (
    mpmath.mpc("0.5", 0), mpmath.mpc("0.25", 0), mpmath.mpc("0.75", 0), mpmath.mpc("0.1", "0.5"),
    mpmath.mpc("0.3", 2), mpmath.mpc("0.5", -3), mpmath.mpc("0.6", "4.5"), mpmath.mpc("0.9", 9),
    mpmath.mpc("0.2", -11), mpmath.mpc("0.7", 20),
)


# -- vectorised exact helpers --------------------------------------------------------
# An element (x + y*beta)/5 is held as two int64 arrays of numerators.

def _sign5(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Exact sign of (x + y*beta)/5 for integer arrays."""
    u = 2 * x + y
    v = y
    cmp = np.sign(u * u - 5 * v * v)
    out = np.where(u >= 0, np.where(v >= 0, 1, cmp), np.where(v <= 0, -1, -cmp))
    return np.where((u == 0) & (v == 0), 0, out)


def _delta5(tab, n: np.ndarray):
    """Numerators of 5*delta(n) from the digit sums: (2n - A) + (2A + n) beta."""
    A = tab.shift_down[n]
    return 2 * n - A, 2 * A + n


def _floor_beta(n: np.ndarray) -> np.ndarray:
    sq = 5 * n * n
    r = np.floor(np.sqrt(sq.astype(np.float64))).astype(np.int64)
    r -= (r * r > sq).astype(np.int64)
    r += ((r + 1) * (r + 1) <= sq).astype(np.int64)
    return (n + r) // 2


def _count(mask: np.ndarray) -> int:
    return int(np.count_nonzero(~mask))


# -- arithmetic ------------------------------------------------------------------------

def _arithmetic(rep: Report, n_max: int, **_):
    tab_size = 2 * n_max + 4
    tab = sequence_table(tab_size)
    n = np.arange(1, n_max + 1, dtype=np.int64)
    X, Y = _delta5(tab, n)
    X1, Y1 = _delta5(tab, n + 1)
    e = (tab.bits[n] & 1).astype(bool)
    d = tab.d[n]

    with rep.timed() as tm:
        step_ok = np.where(e, (X1 - X == 2) & (Y1 - Y == 1), (X1 - X == 1) & (Y1 - Y == 3))
    rep.check("delta_increment", "delta(n+1) - delta(n) = beta^(2-e(n))/sqrt5",
              step_ok.all(), _count(step_ok), 0, 0, tm[0], n_max=n_max)

    with rep.timed() as tm:
        Xp, Yp = -(X + Y), Y  # delta' = -conj(delta)
        c_x, c_y = 3, -1      # 1/(beta sqrt5) = (3 - beta)/5
        below = (_sign5(c_x - Xp, c_y - Yp) > 0) & (_sign5(c_x + Xp, c_y + Yp) > 0)
    rep.check("delta_prime_bound", "|delta'(n)| < 1/(beta sqrt5)", below.all(), _count(below),
              0, 0, tm[0])
    with rep.timed() as tm:
        sg = _sign5(Xp, Yp)
        sign_ok = np.where(d == 1, sg == -1, sg == 1)
    rep.check("delta_prime_sign", "sign(delta'(n)) = -1 iff d(n) = 1", sign_ok.all(),
              _count(sign_ok), 0, 0, tm[0])

    with rep.timed() as tm:
        trace_ok = (X - Xp == 5 * n) & (Y - Yp == 0)
    rep.check("n_equals_delta_minus_delta_prime", "n = delta(n) - delta'(n)", trace_ok.all(),
              _count(trace_ok), 0, 0, tm[0])

    with rep.timed() as tm:
        t0 = n + tab.shift_down[n]
        T0x, T0y = _delta5(tab, t0)
        T1x, T1y = _delta5(tab, t0 + 1)
        tau0_ok = (T0x == Y) & (T0y == X + Y)             # beta * delta(n)
        tau1_ok = (T1x == Y + 1) & (T1y == X + Y + 3)     # + beta^2/sqrt5 = (1 + 3 beta)/5
    rep.check("tau0_scales_delta", "delta(tau0(n)) = beta delta(n)", tau0_ok.all(),
              _count(tau0_ok), 0, 0, tm[0])
    rep.check("tau1_shifts_delta", "delta(tau1(n)) = beta delta(n) + beta^2/sqrt5",
              tau1_ok.all(), _count(tau1_ok), 0, 0, tm[0])

    with rep.timed() as tm:
        f = (d == 1).astype(np.int64)
        c = -_floor_beta(n) - 1 + f                       # {beta n} - 1 + f = c + n beta
        frac_ok = (X == 3 * n + c) & (Y == -(2 * c + n))
    rep.check("fractional_part_identity", "delta(n) = n - ({beta n} - 1 + f(n))/sqrt5",
              frac_ok.all(), _count(frac_ok), 0, 0, tm[0])

    # scalar GoldenNum path on a prefix
    m = min(n_max, 2000)
    bound = 1 / (BETA * SQRT5)
    with rep.timed() as tm:
        bad = 0
        for k in range(1, m + 1):
            p, p1 = delta_exact(k), delta_exact(k + 1)
            w = zeck_encode(k)
            inc = p1.delta - p.delta
            want = BETA * SQRT5 / 5 if w.bits & 1 else BETA**2 * SQRT5 / 5
            ok = inc == want
            ok &= gr_sign(bound - abs(p.delta_prime)) > 0
            ok &= p.delta - p.delta_prime == k
            ok &= delta_exact(tau_shift(k, 0)).delta == BETA * p.delta
            ok &= delta_exact(tau_shift(k, 1)).delta == BETA * p.delta + BETA**2 * SQRT5 / 5
            fr = frac_beta(k)
            ok &= fr == frac_beta_direct(k)
            ok &= p.delta == k - (fr - 1 + seq_term("f", k)) * SQRT5 / 5
            bad += not ok
    rep.check("scalar_api_prefix", "same identities through the GoldenNum API", bad == 0, bad,
              0, 0, tm[0], n_max=m)


# -- sequences -------------------------------------------------------------------------

def _sequences(rep: Report, n_max: int, **_):
    tab = sequence_table(n_max + 1)
    n = np.arange(1, n_max + 1, dtype=np.int64)
    bits = tab.bits[1 : n_max + 1]

    with rep.timed() as tm:
        fibs = [1, 2]
        while len(fibs) < 64:
            fibs.append(fibs[-1] + fibs[-2])
        total = np.zeros_like(n)
        for j in range(int(bits.max()).bit_length()):
            total += ((bits >> j) & 1) * fibs[j]
        ok = (total == n) & ((bits & (bits >> 1)) == 0)
        m = min(n_max, 10**5)
        scalar_bad = sum(zeck_decode(zeck_encode(k)) != k for k in range(m + 1))
    rep.check("zeckendorf_roundtrip", "encode/decode roundtrip without adjacent ones",
              ok.all() and scalar_bad == 0, _count(ok) + scalar_bad, 0, 0, tm[0])

    with rep.timed() as tm:
        stream = np.empty(n_max, dtype=np.int64)
        b = 1
        for i in range(n_max):
            stream[i] = b
            b = _advance(b)[0]
        succ_ok = stream == bits
        m = min(n_max, 10**4)
        scalar_bad = sum(zeck_successor(zeck_encode(k)).bits != zeck_encode(k + 1).bits
                         for k in range(m))
    rep.check("successor_matches_greedy", "successor rewrite agrees with greedy expansion",
              succ_ok.all() and scalar_bad == 0, _count(succ_ok) + scalar_bad, 0, 0, tm[0])

    with rep.timed() as tm:
        ds = np.asarray(d_stream(n_max), dtype=np.int8)
        stream_ok = ds == tab.d[1 : n_max + 1]
        nxt = ds[1:]
        cur = ds[:-1]
        trans_ok = np.where(cur == 0, nxt == 1, np.where(cur == 2, nxt == 0, (nxt == 0) | (nxt == 2)))
    rep.check("d_stream_matches_classification", "incremental d equals suffix classification",
              stream_ok.all(), _count(stream_ok), 0, 0, tm[0])
    rep.check("d_transitions", "d=0 -> 1, d=2 -> 0, d=1 -> 0 or 2", trans_ok.all(),
              _count(trans_ok), 0, 0, 0.0)

    with rep.timed() as tm:
        routes = {r: np.asarray(fib_word_stream(r, n_max), dtype=np.int8)
                  for r in ("automaton", "coding", "morphism", "automaton_dual")}
        base = routes["automaton"]
        mism = {r: int(np.count_nonzero(v != base)) for r, v in routes.items()}
    rep.check("f_routes_agree", "automaton, coding and substitution give the same word",
              not any(mism.values()), sum(mism.values()), 0, 0, tm[0],
              **{f"mismatch_{k}": v for k, v in mism.items()})

    with rep.timed() as tm:
        d = tab.d[1 : n_max + 2]
        f = np.where(d == 1, 1, 0)
        r = np.select([d == 0, d == 1], [0, 1], -1)
        t = np.select([d == 0, d == 1], [1, 0], 2)
        h = np.select([d == 0, d == 1], [-1, 1], 0)
        t_ok = t == 1 - r
        h_ok = h[:-1] == f[:-1] - f[1:]
    rep.check("t_equals_one_minus_r", "t(n) = 1 - r(n)", t_ok.all(), _count(t_ok), 0, 0, tm[0])
    rep.check("h_is_difference_of_f", "h(n) = f(n) - f(n+1)", h_ok.all(), _count(h_ok), 0, 0,
              tm[0])

    with rep.timed() as tm:
        # s(n) = 2 exactly on tau0 of the d = 0 class; r(n) = 1 iff d(n-1) = 0
        s = np.where(d == 1, np.where(tab.tz[1 : n_max + 2] == 1, 2, 1), -1)[:-1]
        zero = n[tab.d[1 : n_max + 1] == 0]
        img = zero + tab.shift_down[zero]
        img = img[img <= n_max]
        marker = np.zeros(n_max + 1, dtype=bool)
        marker[img] = True
        s2_ok = (s == 2) == marker[1:]
        r1_ok = (r[1:-1] == 1) == (d[:-2] == 0)
    rep.check("s_two_on_tau0_image", "s(n) = 2 iff n = tau0(m) with d(m) = 0", s2_ok.all(),
              _count(s2_ok), 0, 0, tm[0])
    rep.check("r_one_after_class_zero", "r(n) = 1 iff d(n-1) = 0", r1_ok.all(), _count(r1_ok),
              0, 0, 0.0)


# -- sets --------------------------------------------------------------------------------

def _windows(n_max: int):
    out = []
    w = 10
    while w < n_max:
        out.append(w)
        w *= 10
    out.append(n_max)
    return out


def _sets(rep: Report, n_max: int, **_):
    tab = sequence_table(2 * n_max + 4)
    failures = {k: 0 for k in ("tau0_image", "tau1_on_12", "tau1_on_0", "union", "intersection",
                               "one_outside")}
    t_start = time.perf_counter()
    for N in _windows(n_max):
        n = np.arange(1, N + 1, dtype=np.int64)
        dn = tab.d[1 : N + 1]
        tau0 = n + tab.shift_down[n]
        tau1 = tau0 + 1
        top0, top1 = int(tau0[-1]), int(tau1[-1])
        m0 = np.arange(1, top0 + 1)
        m1 = np.arange(1, top1 + 1)
        d0, d1 = tab.d[m0], tab.d[m1]
        cmp = {
            "tau0_image": (tau0, m0[(d0 == 1) | (d0 == 2)]),
            "tau1_on_12": (tau1[(dn == 1) | (dn == 2)], m1[(m1 >= 2) & (d1 == 0)]),
            "tau1_on_0": (tau1[dn == 0], m1[d1 == 2]),
        }
        both = np.union1d(tau0, tau1)
        both = both[both <= top0]
        inter = np.intersect1d(tau0, tau1)
        inter = inter[inter <= top0]
        cmp["union"] = (both, np.arange(2, top0 + 1))
        cmp["intersection"] = (inter, m0[d0 == 2])
        for k, (lhs, rhs) in cmp.items():
            if not np.array_equal(np.sort(lhs), rhs):
                failures[k] += 1
        if 1 in tau0 or 1 in tau1:
            failures["one_outside"] += 1
    elapsed = time.perf_counter() - t_start
    anchors = {
        "tau0_image": "tau0(N+) = {n : d(n) in {1,2}}",
        "tau1_on_12": "tau1({d in {1,2}}) = {n >= 2 : d(n) = 0}",
        "tau1_on_0": "tau1({d = 0}) = {n : d(n) = 2}",
        "union": "tau0(N+) u tau1(N+) = {n >= 2}",
        "intersection": "tau0(N+) n tau1(N+) = {n : d(n) = 2}",
        "one_outside": "1 lies outside both images",
    }
    for k, bad in failures.items():
        rep.check(f"set_{k}", anchors[k], bad == 0, bad, 0, 0, elapsed / len(failures),
                  windows=" ".join(map(str, _windows(n_max))))


# -- functional equations ----------------------------------------------------------------

def _series_at(s, N, prec):
    return {sid: direct_sum(sid, s, N=N, prec=prec).value for sid in SeriesId}


def _h_binomial(s, N, prec, tol):
    """beta^-s sum_{m>=0} (beta/sqrt5)^m binom(-s,m) F(s+m)."""
    ratio = mpmath.phi / mpmath.sqrt(5)
    coeffs = binom_coeffs(s, 200)
    total = mpmath.mpc(0)
    for m in range(0, 201):
        w = coeffs[m] * ratio**m
        fm = direct_sum(SeriesId.F, s + m, N=N, tol=tol / 10, prec=prec).value
        term = w * fm
        total += term
        if m > abs(s) + 2 and abs(term) < tol / 100:
            break
    return mpmath.power(mpmath.phi, -s) * total


def _eq7_sides(s, N, prec, tol):
    z = mpmath.power(mpmath.phi, -s)
    D = 1 - 2 * z + z**3
    F = direct_sum(SeriesId.F, s, N=N, prec=prec).value
    ratio = mpmath.phi / mpmath.sqrt(5)
    coeffs = binom_coeffs(s, 200)
    series = mpmath.mpc(0)
    for m in range(1, 201):
        term = coeffs[m] * ratio**m * direct_sum(SeriesId.F, s + m, N=N, tol=tol / 10, prec=prec).value
        series += term
        if m > abs(s) + 2 and abs(term) < tol / 100:
            break
    return D * F, (z - z**3) * series, z


def _functional_equations(rep: Report, terms: int, tol: float, precision_bits: int, **_):
    prec = precision_bits
    with mpmath.workprec(prec + 12):
        d1 = delta_exact(1).delta.to_mpf()
        for s in PROBES:
            tag = mpmath.nstr(s, 6).replace(" ", "")
            with rep.timed() as tm:
                X = _series_at(s, terms, prec)
                F, G, H, I, J = (X[k] for k in SeriesId)
                z = mpmath.power(mpmath.phi, -s)
                e1 = mpmath.power(d1, -s)
                res = {
                    "F_split.with_delta1_term": (F - (z * F + G + e1),
                                                 "F = beta^-s F + G + delta(1)^-s"),
                    "F_split": (F - (z * F + G), "F = beta^-s F + G"),
                    "G_from_H.without_delta1_term": (G - (H - z**2 / (1 - z**2) * G),
                                                     "G = H - beta^-2s/(1 - beta^-2s) G"),
                    "G_from_H": (G - (H - z**2 / (1 - z**2) * G + e1),
                                 "G = H - beta^-2s/(1 - beta^-2s) G + delta(1)^-s"),
                    "F_H_relation.delta1_outside": ((1 - z) * F - ((1 - z**2) * H + e1),
                                                    "(1 - beta^-s) F = (1 - beta^-2s) H + delta(1)^-s"),
                    "F_H_relation": ((1 - z) * F - (1 - z**2) * (H + e1),
                                     "(1 - beta^-s) F = (1 - beta^-2s)(H + delta(1)^-s)"),
                    "I_from_G": (I - z / (1 - z**2) * G, "I = beta^-s/(1 - beta^-2s) G"),
                    "J_from_G": (J - z**2 / (1 - z**2) * G, "J = beta^-2s/(1 - beta^-2s) G"),
                }
            per = tm[0] / len(res)
            for name, (r, anchor) in res.items():
                rep.check(f"{name}[s={tag}]", anchor, abs(r) < tol, abs(r), 0, tol, per)
            with rep.timed() as tm:
                r6 = H - _h_binomial(s, terms, prec, tol)
            rep.check(f"H_binomial[s={tag}]",
                      "H = beta^-s sum_m (beta/sqrt5)^m binom(-s,m) F(s+m)", abs(r6) < tol,
                      abs(r6), 0, tol, tm[0])

        for s in (mpmath.mpf("1.5"), mpmath.mpf("1.2")):
            tag = mpmath.nstr(s, 6)
            with rep.timed() as tm:
                lhs, rhs_series, z = _eq7_sides(s, terms, prec, tol)
                e1 = mpmath.power(d1, -s)
                literal = lhs - (rhs_series + e1)
                fixed = lhs - (rhs_series + (1 - z**2) * e1)
            rep.check(f"F_shift_relation.bare_delta1[s={tag}]",
                      "D(s) F = (beta^-s - beta^-3s) sum_m>=1 (...) F(s+m) + delta(1)^-s",
                      abs(literal) < tol, abs(literal), 0, tol, tm[0] / 2)
            rep.check(f"F_shift_relation[s={tag}]",
                      "D(s) F = (beta^-s - beta^-3s) sum_m>=1 (...) F(s+m) + (1 - beta^-2s) delta(1)^-s",
                      abs(fixed) < tol, abs(fixed), 0, tol, tm[0] / 2)


# -- residues, poles, zeta ---------------------------------------------------------------

def _residues(rep: Report, tol: float, precision_bits: int, **_):
    for sid in SeriesId:
        with rep.timed() as tm:
            r = residue_at(sid, 1, eps=1e-3, prec=precision_bits)
        want = RESIDUE[sid].to_mpf()
        rep.check(f"residue_{sid.value}", f"residue of {sid.value} at s = 1 is {RESIDUE[sid]}",
                  abs(r - want) < tol, r, want, tol, tm[0])


def _poles(rep: Report, precision_bits: int, **_):
    with rep.timed() as tm:
        pts = pole_zeros(-3, 3, prec=max(precision_bits, 128))
    worst = max(p.residual for p in pts)
    rep.check("lattice_residuals", "|1 - 2 beta^-s + beta^-3s| < 1e-20 on all three lines",
              worst < mpmath.mpf("1e-20"), worst, 0, 1e-20, tm[0], points=len(pts))
    period = 2 * mpmath.pi / mpmath.log(mpmath.phi)
    has_one = any(p.s == 1 for p in pts)
    near = [p for p in pts if abs(p.s.real - 1) < 1e-30 and abs(abs(p.s.imag) - period) < 1e-20]
    rep.check("contains_s_equals_1", "s = 1 is a zero", has_one, has_one, True)
    rep.check("contains_1_pm_period", "1 +- 2 pi i/ln beta are zeros", len(near) == 2,
              len(near), 2, 0, 0.0, period=period)
    conj_ok = all(any(abs(q.s - mpmath.conj(p.s)) < 1e-25 for q in pts)
                  for p in pts if -3 <= p.k <= 2 or p.line != "z=-beta")
    rep.check("conjugation_closed", "lattice closed under complex conjugation", conj_ok,
              conj_ok, True)
    try:
        continue_F(1)
        refused = False
    except PoleProximity:
        refused = True
    rep.check("pole_refusal_at_1", "evaluation at s = 1 is refused", refused, refused, True)


def _zeta_relation(rep: Report, terms: int, tol: float, precision_bits: int, **_):
    with rep.timed() as tm:
        rel = zeta_relation_sides(mpmath.mpf("2.5"), 40, terms, precision_bits)
    rep.check("zeta_relation[s=2.5,M=40]",
              "zeta(s) - F(s) = sum_m binom(-s,m) sum_n (-delta')^m delta^(-s-m)",
              rel.difference < tol, rel.difference, 0, tol, tm[0], lhs=rel.lhs, rhs=rel.rhs)
    with rep.timed() as tm:
        small = min(terms, 10**5)
        r1 = zeta_relation_sides(3, 1, small, precision_bits)
        r2 = zeta_relation_sides(3, 2, small, precision_bits)
    rep.info("zeta_truncation_M1_vs_M2[s=3]", "truncation order shrinks the gap",
             r2.difference / r1.difference, "", tm[0], gap_M1=r1.difference, gap_M2=r2.difference)
    rep.check("zeta_truncation_shrinks[s=3]", "adding the m = 2 term reduces the gap",
              r2.difference < r1.difference, r2.difference, r1.difference)
    with rep.timed() as tm:
        a = zeta_relation_sides(2, 40, small // 2, precision_bits)
        b = zeta_relation_sides(2, 40, small, precision_bits)
    rep.check("zeta_refinement[s=2]", "doubling N keeps the gap within bounds",
              b.difference <= max(a.difference, tol), b.difference, a.difference, tol, tm[0])


# -- K limits and P/Q ------------------------------------------------------------------

def _k_limits(rep: Report, tol: float, precision_bits: int, **_):
    pairs = {"(1,beta/sqrt5)": (GoldenNum(1), BETA * SQRT5 / 5),
             "(beta,beta^2/sqrt5)": (BETA, BETA**2 * SQRT5 / 5)}
    s = mpmath.mpf("1e-3")
    for i, X in K_CLASSES.items():
        for label, (a, b) in pairs.items():
            ratio = (b / a)
            want = (ratio * RESIDUE[X]).to_mpf()
            bound = tol * float(ratio) * 5
            with rep.timed() as tm:
                k = k_eval(i, a, b, s, tol=1e-10, prec=precision_bits).value
            rep.check(f"K{i}_limit{label}", f"K^({i})_(a,b)(s) -> (b/a) res({X.value}) as s -> 0",
                      abs(k - want) < bound, k, want, bound, tm[0])

    L = mpmath.log(mpmath.phi)
    sq5 = mpmath.sqrt(5)
    h = mpmath.mpf("1e-4")
    with rep.timed() as tm:
        p0 = p_eval(0, prec=precision_bits).value
        q0 = q_eval(0, prec=precision_bits).value
        dp = (p_eval(h, tol=1e-12).value - p_eval(-h, tol=1e-12).value) / (2 * h)
        dq = (q_eval(h, tol=1e-12).value - q_eval(-h, tol=1e-12).value) / (2 * h)
    rep.check("P_at_0", "P(0) = 0", abs(p0) < 1e-20, p0, 0, 1e-20, tm[0] / 4)
    rep.check("Q_at_0", "Q(0) = 0", abs(q0) < 1e-20, q0, 0, 1e-20, tm[0] / 4)
    want_dp = L * (mpmath.phi - 1) / sq5
    want_dq = L * (mpmath.phi / sq5 - 1)
    rep.check("P_derivative_at_0", "P'(0) = ln beta (beta - 1)/sqrt5", abs(dp - want_dp) < 1e-4,
              dp, want_dp, 1e-4, tm[0] / 4)
    rep.check("Q_derivative_at_0", "Q'(0) = ln beta (beta/sqrt5 - 1)", abs(dq - want_dq) < 1e-4,
              dq, want_dq, 1e-4, tm[0] / 4)

    targets = closed_forms()
    with rep.timed() as tm:
        p1 = p_eval(1, tol=1e-10, prec=precision_bits).value
        q1 = q_eval(1, tol=1e-10, prec=precision_bits).value
    rep.check("P_at_1_closed_form", "P(1) = beta^-3 ln beta", abs(p1 - targets["r"]) < 1e-5,
              p1, targets["r"], 1e-5, tm[0] / 2)
    rep.check("Q_at_1_closed_form", "Q(1) = (3/2 beta^-4 - beta^-2) ln beta",
              abs(q1 - targets["s"]) < 1e-5, q1, targets["s"], 1e-5, tm[0] / 2)
    # the analytic route against brute-force partial sums of the same series
    from .theorem2 import partial_sums
    from ..dirichlet.numerics import richardson

    raw = partial_sums(10**6, [5 * 10**5, 10**6])
    r_sum = richardson([mpmath.mpf(v) for v in raw["r"]], 2, 1)
    s_sum = richardson([mpmath.mpf(v) for v in raw["s_from1"]], 2, 1)
    rep.check("P_at_1_matches_r_sum", "P(1) equals the r-weighted telescoping sum",
              abs(p1 - r_sum) < 1e-5, p1, r_sum, 1e-5)
    rep.check("Q_at_1_matches_s_sum", "Q(1) equals the s-weighted sum from n = 1",
              abs(q1 - s_sum) < 1e-5, q1, s_sum, 1e-5)
    rep.info("Q_equals_minus_P", "Q(1) + P(1)", p1 + q1, 0)

    # single-ratio forms in G; reported only, their numerators vanish at s = 1
    for s in (mpmath.mpf(2), mpmath.mpc("2.5", 1)):
        tag = mpmath.nstr(s, 6).replace(" ", "")
        with rep.timed() as tm:
            z = mpmath.power(mpmath.phi, -s)
            g = direct_sum("G", s, tol=1e-12, prec=precision_bits).value
            p = p_eval(s, tol=1e-12, prec=precision_bits).value
            q = q_eval(s, tol=1e-12, prec=precision_bits).value
            p_ratio = (1 - z - z**2) / (1 + z) * g
            q_ratio = (z + z**2 - 1) / (1 + z) * g
        rep.info(f"P_G_ratio_form[s={tag}]", "P = (1 - beta^-s - beta^-2s)/(1 + beta^-s) G",
                 abs(p - p_ratio), 0, tm[0] / 2, P=p, ratio_form=p_ratio)
        rep.info(f"Q_G_ratio_form[s={tag}]", "Q = (beta^-s + beta^-2s - 1)/(1 + beta^-s) G",
                 abs(q - q_ratio), 0, tm[0] / 2, Q=q, ratio_form=q_ratio)


# -- continuation ----------------------------------------------------------------------

def _continuation(rep: Report, tol: float, precision_bits: int, terms: int, **_):
    worst = mpmath.mpf(0)
    with rep.timed() as tm:
        for s in CONTINUATION_PROBES:
            a = continue_F(s, tol=tol / 100, base=2, N=terms, prec=precision_bits).value
            b = continue_F(s, tol=tol / 100, base=3, N=terms, prec=precision_bits).value
            worst = max(worst, abs(a - b))
    rep.check("base_independence", "continuation with bases 2 and 3 agrees", worst < tol, worst,
              0, tol, tm[0], points=len(CONTINUATION_PROBES))
    with rep.timed() as tm:
        c = continue_F(2, tol=1e-10, N=terms, prec=precision_bits)
        d = direct_sum(SeriesId.F, 2, N=terms, prec=precision_bits)
    gap = abs(c.value - d.value)
    rep.check("continuation_overlap[s=2]", "continued F equals the direct sum at s = 2",
              gap <= c.error_bound + d.error_bound, gap, 0, c.error_bound + d.error_bound, tm[0])
    try:
        continue_F(1)
        refused = False
    except PoleProximity:
        refused = True
    rep.check("pole_refusal_at_1", "evaluation at s = 1 is refused", refused, refused, True)


SUITES = {
    "arithmetic": _arithmetic,
    "sequences": _sequences,
    "sets": _sets,
    "functional_equations": _functional_equations,
    "residues": _residues,
    "theorem2": None,
    "poles": _poles,
    "zeta_relation": _zeta_relation,
    "k_limits": _k_limits,
    "continuation": _continuation,
}


def run_suite(name: str, n_max: int | None = None, precision_bits: int | None = None,
              tol: float | None = None, terms: int | None = None) -> Report:
    """Run one named suite; omitted parameters take per-suite defaults."""
    if name not in SUITES:
        raise ConfigError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    dflt = DEFAULTS[name]
    settings = config.get()
    n_max = dflt.get("n_max", 10**5) if n_max is None else int(n_max)
    terms = dflt.get("terms", settings.terms) if terms is None else int(terms)
    tol = dflt.get("tol", settings.tol) if tol is None else float(tol)
    prec = settings.precision_bits if precision_bits is None else int(precision_bits)
    if not 10 <= n_max <= 10**8:
        raise ConfigError("n_max must lie in [10, 1e8]")
    if prec < 64:
        raise ConfigError("precision_bits must be >= 64")
    if not 10 <= terms <= 10**8:
        raise ConfigError("terms must lie in [10, 1e8]")
    if not 0 < tol < 1:
        raise ConfigError("tol must lie in (0, 1)")
    if name == "theorem2":
        return theorem2_sums(max(n_max, 10**4), levels=2, tol=tol)
    rep = Report(name, {"n_max": n_max, "precision_bits": prec, "tol": tol, "terms": terms})
    with config.override(precision_bits=prec), mpmath.workprec(prec):
        SUITES[name](rep, n_max=n_max, tol=tol, terms=terms, precision_bits=prec)
    return rep
