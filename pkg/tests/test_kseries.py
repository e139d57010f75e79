import mpmath
import pytest

from fibdir.dirichlet import k_eval, p_eval, q_eval
from fibdir.errors import DomainError
from fibdir.golden import BETA, SQRT5, GoldenNum
from fibdir.verification.theorem2 import partial_sums

LN_BETA = mpmath.log(mpmath.phi)
PAIRS = [(GoldenNum(1), BETA / SQRT5), (BETA, BETA * BETA / SQRT5)]


@pytest.mark.parametrize("a, b", PAIRS)
def test_limits_near_zero(a, b):
    ratio = float(b / a)
    targets = {0: ratio * (1 - 1 / mpmath.phi), 1: ratio * (1 - 1 / mpmath.phi),
               2: ratio * (1 / mpmath.phi - mpmath.phi ** -2), 3: ratio}
    for i, want in targets.items():
        got = k_eval(i, a, b, mpmath.mpf("1e-3"), tol=1e-8).value
        assert abs(got - want) < 1e-3 * ratio * 5


def test_zero_b_gives_zero():
    assert k_eval(2, BETA, GoldenNum(0), mpmath.mpc(3, 1)).value == 0


def test_k_domain():
    with pytest.raises(DomainError):
        k_eval(0, GoldenNum(-1), GoldenNum(1), 2)
    with pytest.raises(DomainError):
        k_eval(0, GoldenNum(1), GoldenNum(2), 2)
    with pytest.raises(ValueError):
        k_eval(4, GoldenNum(1), GoldenNum(1), 2)


def test_p_and_q_vanish_at_zero():
    assert abs(p_eval(0).value) < 1e-20
    assert abs(q_eval(0).value) < 1e-20


def test_derivatives_at_zero():
    h = mpmath.mpf("1e-4")
    dp = (p_eval(h, tol=1e-12).value - p_eval(-h, tol=1e-12).value) / (2 * h)
    dq = (q_eval(h, tol=1e-12).value - q_eval(-h, tol=1e-12).value) / (2 * h)
    assert abs(dp - LN_BETA * (mpmath.phi - 1) / mpmath.sqrt(5)) < 1e-4
    assert abs(dq - LN_BETA * (mpmath.phi / mpmath.sqrt(5) - 1)) < 1e-4


def test_p_at_one_equals_the_telescoping_r_sum():
    # independent route: brute-force partial sums with Richardson over N, N/2
    raw = partial_sums(2 * 10**5, [10**5, 2 * 10**5])["r"]
    extrapolated = 2 * raw[1] - raw[0]
    assert abs(p_eval(1, tol=1e-9).value - extrapolated) < 1e-5


def test_q_is_minus_p_at_one():
    p, q = p_eval(1, tol=1e-9), q_eval(1, tol=1e-9)
    assert abs(p.value + q.value) < 1e-8
