import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from fibdir.dirichlet.numerics import binom_coeffs, hurwitz_em, pairwise_sum, richardson


def test_binom_examples():
    assert [complex(c) for c in binom_coeffs(1, 3)] == [1, -1, 1, -1]
    assert [complex(c) for c in binom_coeffs(2, 2)] == [1, -2, 3]


def test_binom_small_s_bound():
    cs = binom_coeffs(mpmath.mpf("0.25"), 50)
    assert all(abs(c) <= 0.25 for c in cs[1:])


def test_binom_rejects_zero_order():
    with pytest.raises(ValueError):
        binom_coeffs(1, 0)


def test_richardson_removes_one_over_n():
    limit, c = mpmath.mpf(3), mpmath.mpf(7)
    vals = [limit + c / n for n in (100, 200, 400)]
    assert abs(richardson(vals, ratio=2, order=1) - limit) < mpmath.mpf(10) ** -30


def test_pairwise_sum_matches_fsum():
    vals = [mpmath.mpf(1) / k for k in range(1, 500)]
    assert abs(pairwise_sum(vals) - mpmath.fsum(vals)) < mpmath.mpf(10) ** -30


@pytest.mark.parametrize("s, a", [(2, 1), (3.5, 2.25), (1.1, 7), (12, 1.5)])
def test_hurwitz_real_matches_mpmath(s, a):
    with mpmath.workprec(128):
        ref = mpmath.zeta(mpmath.mpf(s), mpmath.mpf(a))
        assert abs(hurwitz_em(mpmath.mpf(s), mpmath.mpf(a)) - ref) < mpmath.mpf(10) ** -30 * abs(ref)


@given(st.floats(1.2, 6), st.floats(-20, 20), st.floats(0.5, 50))
def test_hurwitz_complex_matches_mpmath(re, im, a):
    with mpmath.workprec(80):
        s = mpmath.mpc(re, im)
        ref = mpmath.zeta(s, mpmath.mpf(a))
        assert abs(hurwitz_em(s, mpmath.mpf(a)) - ref) < 1e-18 * max(1, abs(ref))
