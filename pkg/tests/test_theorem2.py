import math

import mpmath

from fibdir.sequences import delta_exact, seq_term
from fibdir.verification.theorem2 import closed_forms, partial_sums, theorem2_sums


def test_partial_sums_match_exact_terms():
    N = 300
    raw = partial_sums(10**4, [N])
    inv = [None] + [1 / float(delta_exact(n).delta) for n in range(1, N + 1)]
    r = math.fsum(seq_term("r", n) * (inv[n - 1] - inv[n]) for n in range(2, N + 1))
    s = math.fsum(seq_term("s", n) * inv[n] for n in range(1, N + 1))
    assert abs(raw["r"][0] - r) < 1e-12
    assert abs(raw["s_from1"][0] - s) < 1e-12


def test_closed_form_constants():
    c = closed_forms()
    assert abs(c["inv_delta1"] - 1 / delta_exact(1).delta.to_mpf(64)) < 1e-15
    assert abs(c["r"] - mpmath.phi ** -3 * mpmath.log(mpmath.phi)) < 1e-15


def test_report_structure_small():
    rep = theorem2_sums(N=4 * 10**4, exact_n=2000)
    ids = [e.check_id for e in rep.entries]
    for cid in ("two_term_forms_agree", "r_sum", "d1_sum", "d2_sum", "s_sum", "t_sum",
                "t_plus_r_telescopes", "raw_error_decreases", "runtime"):
        assert cid in ids
    assert rep.get("two_term_forms_agree").status == "pass"
    assert rep.get("t_plus_r_telescopes").status == "pass"
    assert rep.get("t_sum").status == "informational"
