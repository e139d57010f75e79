"""delta/delta' values and the morphic sequences f, d, h, r, s, t.

Every sequence is 1-indexed.  Per-term functions go through the Zeckendorf
codec; the ``*_stream`` generators walk successors and never re-encode.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from .golden import BETA, ONE, SQRT5, GoldenNum, beta_pow, gr_sign
from .zeckendorf import _advance, classify_d, trailing_zeros, zeck_encode

__all__ = [
    "SeqId",
    "DeltaPair",
    "delta_exact",
    "delta_from_digits",
    "seq_term",
    "code_term",
    "fib_word_stream",
    "d_stream",
    "d_morphism_stream",
    "frac_beta",
    "frac_beta_direct",
    "F_AUTOMATON",
    "F_AUTOMATON_DUAL",
    "run_automaton",
]


class SeqId(str, Enum):
    f = "f"
    d = "d"
    h = "h"
    r = "r"
    s = "s"
    t = "t"


# coding tables indexed by d(n); s needs trailing-zero data and is handled apart
_CODING = {
    SeqId.f: (0, 1, 0),
    SeqId.d: (0, 1, 2),
    SeqId.h: (-1, 1, 0),
    SeqId.r: (0, 1, -1),
    SeqId.t: (1, 0, 2),
}


@dataclass(frozen=True)
class DeltaPair:
    delta: GoldenNum
    delta_prime: GoldenNum


_INV_SQRT5 = SQRT5 / 5


def delta_from_digits(word_bits: int) -> GoldenNum:
    """``delta = (sum of beta**(j+2) over the set digits) / sqrt5``."""
    acc = GoldenNum(0, 0)
    j = 0
    while word_bits:
        if word_bits & 1:
            acc = acc + beta_pow(j + 2)
        word_bits >>= 1
        j += 1
    return acc * _INV_SQRT5


def delta_exact(n: int) -> DeltaPair:
    if n < 1:
        raise ValueError("delta is evaluated for n >= 1")
    d = delta_from_digits(zeck_encode(n).bits)
    return DeltaPair(d, -d.conj())


def code_term(seq: SeqId | str, d: int, tz: int) -> int:
    seq = SeqId(seq)
    if seq is SeqId.s:
        if d != 1:
            return -1
        return 2 if tz == 1 else 1
    return _CODING[seq][d]


def seq_term(seq: SeqId | str, n: int) -> int:
    if n < 1:
        raise ValueError("sequences are 1-indexed")
    w = zeck_encode(n)
    return code_term(seq, classify_d(w), trailing_zeros(w))


# Two-state machine reading MSB-first; output is the final state.  A 1 always
# returns to state 0, a 0 toggles: the output is the parity of trailing zeros.
F_AUTOMATON = {0: {"1": 0, "0": 1}, 1: {"0": 0, "1": 0}}
# Dual machine on the expansion of n - 1; its output is the last digit.
F_AUTOMATON_DUAL = {0: {"0": 0, "1": 1}, 1: {"0": 0, "1": 1}}


def run_automaton(table: dict, word: str, start: int = 0) -> int:
    state = start
    for ch in word:
        state = table[state][ch]
    return state


def _iter_words(start: int = 1) -> Iterator[tuple[int, int]]:
    """Yield ``(bits, trailing_zeros)`` for n = start, start+1, ..."""
    bits = zeck_encode(start).bits
    tz = (bits & -bits).bit_length() - 1 if bits else -1
    while True:
        yield bits, tz
        bits, tz = _advance(bits)


def _fib_word_morphism(count: int) -> list[int]:
    word = "0"
    sub = {"0": "01", "1": "0"}
    while len(word) < count:
        word = "".join(sub[c] for c in word)
    return [int(c) for c in word[:count]]


def fib_word_stream(route: str, count: int) -> list[int]:
    """First ``count`` terms of the Fibonacci word f by one of three routes."""
    if count < 1:
        raise ValueError("count must be >= 1")
    if route == "automaton":
        out = []
        for _, (bits, _) in zip(range(count), _iter_words(1)):
            out.append(run_automaton(F_AUTOMATON, format(bits, "b")))
        return out
    if route == "automaton_dual":
        out = []
        prev = ""
        for _, (bits, _) in zip(range(count), _iter_words(1)):
            out.append(run_automaton(F_AUTOMATON_DUAL, prev))
            prev = format(bits, "b")
        return out
    if route == "coding":
        f_code = _CODING[SeqId.f]
        return [f_code[_d_of(tz)] for _, (_, tz) in zip(range(count), _iter_words(1))]
    if route == "morphism":
        return _fib_word_morphism(count)
    raise ValueError(f"unknown route {route!r}")


def _d_of(tz: int) -> int:
    if tz == 0:
        return 0
    return 1 if tz & 1 else 2


def d_stream(count: int, start: int = 1) -> list[int]:
    """d(start), ..., d(start + count - 1) from successor bookkeeping."""
    if count < 1:
        raise ValueError("count must be >= 1")
    if start < 1:
        raise ValueError("d is defined for n >= 1")
    return [_d_of(tz) for _, (_, tz) in zip(range(count), _iter_words(start))]


def d_morphism_stream(count: int) -> list[int]:
    """d as the fixed point of 0 -> 01, 1 -> 2, 2 -> 01 (a relabelled A270788)."""
    sub = {0: (0, 1), 1: (2,), 2: (0, 1)}
    word = [0]
    while len(word) < count:
        word = [c for a in word for c in sub[a]]
    return word[:count]


def frac_beta(n: int) -> GoldenNum:
    """Exact fractional part of ``beta*n``, read off the sign of delta'(n)."""
    dp = delta_exact(n).delta_prime
    scaled = SQRT5 * dp
    return ONE - scaled if gr_sign(dp) > 0 else -scaled


def frac_beta_direct(n: int) -> GoldenNum:
    """``beta*n - floor(beta*n)`` with the floor from an integer square root."""
    from math import isqrt

    return BETA * n - (n + isqrt(5 * n * n)) // 2
