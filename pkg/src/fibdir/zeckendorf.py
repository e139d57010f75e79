"""Zeckendorf numeration: codec, successor, suffix classes, and shift maps.

A word is stored as an int bitmask, least significant digit first: bit ``j``
is the coefficient of ``F_{j+2}``.  Text is always most significant first.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass

from .errors import EmptyWord, InvalidWord

__all__ = [
    "ZeckWord",
    "zeck_encode",
    "zeck_decode",
    "zeck_successor",
    "classify_d",
    "last_bit_e",
    "tau_shift",
    "trailing_zeros",
]

# _FIB[j] = F_{j+2}
_FIB: list[int] = [1, 2]


def _fib_upto(n: int) -> None:
    while _FIB[-1] <= n:
        _FIB.append(_FIB[-1] + _FIB[-2])


def _digit_value(j: int) -> int:
    while len(_FIB) <= j:
        _FIB.append(_FIB[-1] + _FIB[-2])
    return _FIB[j]


@dataclass(frozen=True, slots=True)
class ZeckWord:
    """A canonical Zeckendorf word (no adjacent ones, no leading zeros)."""

    bits: int = 0

    def __post_init__(self):
        if self.bits < 0:
            raise InvalidWord("negative bitmask")
        if self.bits & (self.bits >> 1):
            raise InvalidWord(f"adjacent ones in {self}")

    @classmethod
    def parse(cls, text: str) -> "ZeckWord":
        """Parse an MSB-first string over {0,1}; the empty string encodes 0."""
        text = text.strip()
        if text and set(text) - {"0", "1"}:
            raise InvalidWord(f"not a binary word: {text!r}")
        if text.startswith("0"):
            raise InvalidWord(f"leading zero in {text!r}")
        if "11" in text:
            raise InvalidWord(f"adjacent ones in {text!r}")
        return cls(int(text, 2) if text else 0)

    @classmethod
    def from_digits(cls, digits) -> "ZeckWord":
        """Build from an LSB-first digit sequence; trailing (high) zeros are dropped."""
        bits = 0
        for j, e in enumerate(digits):
            if e not in (0, 1):
                raise InvalidWord(f"digit {e!r} at position {j}")
            bits |= e << j
        return cls(bits)

    @property
    def digits(self) -> tuple[int, ...]:
        """LSB-first digits ``(eps_0, eps_1, ...)``."""
        return tuple((self.bits >> j) & 1 for j in range(self.bits.bit_length()))

    def __len__(self):
        return self.bits.bit_length()

    def __getitem__(self, j: int) -> int:
        if j < 0:
            raise IndexError(j)
        return (self.bits >> j) & 1

    def __str__(self):
        return format(self.bits, "b") if self.bits else ""

    def __int__(self):
        return zeck_decode(self)


def zeck_encode(n: int) -> ZeckWord:
    if n < 0:
        raise ValueError("Zeckendorf expansion is defined for n >= 0")
    _fib_upto(n)
    bits = 0
    j = bisect_right(_FIB, n) - 1
    while n:
        if _FIB[j] <= n:
            n -= _FIB[j]
            bits |= 1 << j
            j -= 2
        else:
            j -= 1
    return ZeckWord(bits)


def zeck_decode(w: ZeckWord) -> int:
    bits = w.bits
    if bits & (bits >> 1):
        raise InvalidWord("adjacent ones")
    total = 0
    j = 0
    while bits:
        if bits & 1:
            total += _digit_value(j)
        bits >>= 1
        j += 1
    return total


def _advance(bits: int) -> tuple[int, int]:
    """Successor bitmask together with its trailing-zero count."""
    if bits & 1:
        i = 1
        while (bits >> (2 * i)) & 1:
            i += 1
        low = (1 << (2 * i)) - 1
        return (bits & ~low) | (1 << (2 * i - 1)), 2 * i - 1
    if bits & 2:
        i = 1
        while (bits >> (2 * i + 1)) & 1:
            i += 1
        low = (1 << (2 * i + 1)) - 1
        return (bits & ~low) | (1 << (2 * i)), 2 * i
    return bits | 1, 0


def zeck_successor(w: ZeckWord) -> ZeckWord:
    """Word for ``decode(w) + 1`` by rewriting the suffix in place.

    Suffix ``0(01)^i``  -> ``01 0^(2i-1)``   (last digit 1)
    Suffix ``0(01)^i 0`` -> ``01 0^(2i)``    (ends in 10)
    Suffix ``00``        -> ``01``
    """
    return ZeckWord(_advance(w.bits)[0])


def trailing_zeros(w: ZeckWord) -> int:
    if not w.bits:
        raise EmptyWord("trailing zeros of the empty word (n = 0) are undefined")
    return (w.bits & -w.bits).bit_length() - 1


def classify_d(w: ZeckWord) -> int:
    """Suffix class: 0 if the word ends in 1, else 1/2 for odd/even trailing zeros."""
    if not w.bits:
        raise EmptyWord("d(0) is undefined")
    z = trailing_zeros(w)
    if z == 0:
        return 0
    return 1 if z % 2 else 2


def last_bit_e(w: ZeckWord) -> int:
    return w.bits & 1


def tau_shift(n: int, variant: int) -> int:
    """``tau_0`` shifts every digit up one place; ``tau_1`` adds F_2 = 1 on top."""
    if n < 1:
        raise ValueError("tau maps are defined for n >= 1")
    if variant not in (0, 1):
        raise ValueError("variant must be 0 or 1")
    shifted = zeck_decode(ZeckWord(zeck_encode(n).bits << 1))
    return shifted + variant
