from fractions import Fraction

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from fibdir.errors import DivisionByZero
from fibdir.golden import (BETA, ONE, SQRT5, ZERO, GoldenNum, beta_pow, fib, gr_arith, gr_conj,
                           gr_sign, gr_to_float)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=20)
golden = st.builds(GoldenNum, rationals, rationals)


def test_mul_example():
    assert gr_arith("mul", 1 + BETA, 1 + BETA) == GoldenNum(2, 3)


def test_div_by_beta():
    assert gr_arith("div", ONE, BETA) == GoldenNum(-1, 1)


def test_additive_inverse():
    assert gr_arith("add", GoldenNum(-1, 2), GoldenNum(1, -2)) == ZERO


def test_sqrt5_squares_to_five():
    assert SQRT5 * SQRT5 == GoldenNum(5, 0)


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        gr_arith("div", ONE, ZERO)


def test_conj_examples():
    assert gr_conj(BETA) == GoldenNum(1, -1)
    assert gr_conj(SQRT5) == GoldenNum(1, -2)
    a, b = 1 + BETA, 2 + BETA
    assert gr_conj(a * b) == gr_conj(a) * gr_conj(b)


@pytest.mark.parametrize("value, sign", [(GoldenNum(1, -1), -1), (ZERO, 0), (GoldenNum(-4, 3), 1)])
def test_sign_examples(value, sign):
    assert gr_sign(value) == sign


def test_to_float():
    assert mpmath.nstr(gr_to_float(BETA, 53), 11) == "1.6180339887"
    assert mpmath.nstr(gr_to_float(SQRT5, 53), 11) == "2.2360679775"
    assert gr_to_float(ZERO, 53) == 0


def test_beta_pow_examples():
    assert beta_pow(5) == GoldenNum(3, 5)
    assert beta_pow(0) == ONE
    assert beta_pow(-1) == GoldenNum(-1, 1)


def test_beta_pow_inverse_pairs():
    for k in range(-50, 51):
        assert beta_pow(k) * beta_pow(-k) == ONE


def test_beta_pow_fibonacci_coefficients():
    for k in range(1, 40):
        assert beta_pow(k) == GoldenNum(fib(k - 1), fib(k))


def test_parse_forms():
    assert GoldenNum.parse("2/5,1/5") == GoldenNum(Fraction(2, 5), Fraction(1, 5))
    assert GoldenNum.parse("-1/2 + 3*beta") == GoldenNum(Fraction(-1, 2), 3)
    assert GoldenNum.parse("2*sqrt5") == GoldenNum(-2, 4)
    with pytest.raises(ValueError):
        GoldenNum.parse("beta^2")


@given(golden, golden, golden)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@given(golden)
def test_inverse_and_norm(a):
    if a:
        assert a * a.inverse() == ONE
    assert a * gr_conj(a) == GoldenNum(a.norm())


@given(golden, golden)
def test_sign_agrees_with_float(a, b):
    diff = a - b
    approx = float(gr_to_float(diff, 200))
    if abs(approx) > 1e-9:
        assert gr_sign(diff) == (1 if approx > 0 else -1)
    assert (a < b) == (gr_sign(diff) < 0)


@given(golden)
def test_str_parse_roundtrip(a):
    assert GoldenNum.parse(str(a)) == a
