import pytest
from hypothesis import given
from hypothesis import strategies as st

from fibdir.errors import EmptyWord, InvalidWord
from fibdir.golden import fib
from fibdir.zeckendorf import (ZeckWord, classify_d, last_bit_e, tau_shift, trailing_zeros,
                               zeck_decode, zeck_encode, zeck_successor)


def enc(n):
    return str(zeck_encode(n))


def test_encode_examples():
    assert enc(0) == ""
    assert enc(1) == "1"
    assert enc(100) == "1000010100"


def test_decode_examples():
    assert zeck_decode(ZeckWord.parse("1")) == 1
    assert zeck_decode(ZeckWord.parse("1010")) == 7
    assert zeck_decode(zeck_encode(10**6)) == 10**6


@pytest.mark.parametrize("text", ["11", "0101", "12", "1101"])
def test_parse_rejects_noncanonical(text):
    with pytest.raises(InvalidWord):
        ZeckWord.parse(text)


def test_raw_bits_with_adjacent_ones_rejected():
    with pytest.raises(InvalidWord):
        ZeckWord(0b110)


def test_successor_examples():
    assert str(zeck_successor(zeck_encode(4))) == "1000"
    assert str(zeck_successor(zeck_encode(0))) == "1"
    assert str(zeck_successor(zeck_encode(2))) == "100"


def test_classify_examples():
    assert classify_d(zeck_encode(1)) == 0
    assert classify_d(zeck_encode(2)) == 1
    assert classify_d(zeck_encode(3)) == 2
    assert classify_d(zeck_encode(8)) == 2
    with pytest.raises(EmptyWord):
        classify_d(zeck_encode(0))


def test_last_bit_examples():
    assert last_bit_e(zeck_encode(1)) == 1
    assert last_bit_e(zeck_encode(2)) == 0
    assert last_bit_e(zeck_encode(4)) == 1
    assert last_bit_e(zeck_encode(0)) == 0


def test_tau_examples():
    assert tau_shift(4, 0) == 7
    assert tau_shift(1, 1) == 3
    assert tau_shift(4, 1) == 8
    with pytest.raises(ValueError):
        tau_shift(0, 0)


def test_trailing_zero_examples():
    assert trailing_zeros(zeck_encode(1)) == 0
    assert trailing_zeros(zeck_encode(5)) == 3
    assert trailing_zeros(zeck_encode(7)) == 1


def test_successor_chain_matches_greedy():
    w = zeck_encode(0)
    for n in range(1, 5000):
        w = zeck_successor(w)
        assert w == zeck_encode(n)


def test_fibonacci_numbers_are_single_digits():
    for j in range(2, 60):
        w = zeck_encode(fib(j))
        assert w.bits == 1 << (j - 2)


@given(st.integers(min_value=0, max_value=10**30))
def test_roundtrip_and_canonical(n):
    w = zeck_encode(n)
    assert zeck_decode(w) == n
    assert w.bits & (w.bits >> 1) == 0
    assert ZeckWord.parse(str(w)) == w


@given(st.integers(min_value=1, max_value=10**12))
def test_tau_maps_are_injective_steps(n):
    t0 = tau_shift(n, 0)
    assert tau_shift(n, 1) == t0 + 1
    assert classify_d(zeck_encode(t0)) in (1, 2)
