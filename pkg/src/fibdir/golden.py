"""Exact arithmetic in Q(beta), beta = (1 + sqrt 5)/2.

Elements are stored as ``x + y*beta`` with rational ``x`` and ``y``.  The
reduction rule ``beta**2 = beta + 1`` keeps every product in that basis, and
``sqrt 5 = 2*beta - 1`` is exact.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from numbers import Rational

import mpmath
from gmpy2 import mpq
from mpmath import libmp

from .errors import DivisionByZero

__all__ = [
    "GoldenNum",
    "BETA",
    "SQRT5",
    "ZERO",
    "ONE",
    "gr_arith",
    "gr_conj",
    "gr_sign",
    "gr_to_float",
    "beta_pow",
    "fib",
]

_MPQ = type(mpq(0))


def _q(v) -> mpq:
    if isinstance(v, _MPQ):
        return v
    if isinstance(v, (int, Fraction)):
        return mpq(v)
    if isinstance(v, Rational):
        return mpq(int(v.numerator), int(v.denominator))
    if isinstance(v, str):
        return mpq(Fraction(v))
    raise TypeError(f"cannot use {type(v).__name__} as an exact rational")


class GoldenNum:
    """Immutable element ``x + y*beta`` of Q(beta)."""

    __slots__ = ("x", "y")

    def __init__(self, x=0, y=0):
        # mpq is always canonical: lowest terms, positive denominator
        object.__setattr__(self, "x", _q(x))
        object.__setattr__(self, "y", _q(y))

    def __setattr__(self, name, value):
        raise AttributeError("GoldenNum is immutable")

    @classmethod
    def _raw(cls, x: mpq, y: mpq) -> "GoldenNum":
        obj = object.__new__(cls)
        object.__setattr__(obj, "x", x)
        object.__setattr__(obj, "y", y)
        return obj

    @staticmethod
    def _coerce(other) -> "GoldenNum | None":
        if isinstance(other, GoldenNum):
            return other
        if isinstance(other, (int, Fraction, _MPQ)):
            return GoldenNum._raw(_q(other), mpq(0))
        return None

    # -- ring operations -------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GoldenNum._raw(self.x + o.x, self.y + o.y)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GoldenNum._raw(self.x - o.x, self.y - o.y)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return GoldenNum._raw(-self.x, -self.y)

    def __pos__(self):
        return self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        x1, y1, x2, y2 = self.x, self.y, o.x, o.y
        yy = y1 * y2
        return GoldenNum._raw(x1 * x2 + yy, x1 * y2 + x2 * y1 + yy)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "GoldenNum":
        n = self.norm()
        if n == 0:
            raise DivisionByZero("division by zero in Q(beta)")
        c = self.conj()
        return GoldenNum._raw(c.x / n, c.y / n)

    # -- field structure -------------------------------------------------
    def conj(self) -> "GoldenNum":
        """Galois conjugate, beta -> 1 - beta."""
        return GoldenNum._raw(self.x + self.y, -self.y)

    def norm(self) -> mpq:
        return self.x * self.x + self.x * self.y - self.y * self.y

    def trace(self) -> mpq:
        return 2 * self.x + self.y

    def sign(self) -> int:
        return gr_sign(self)

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def is_rational(self) -> bool:
        return self.y == 0

    # -- comparisons ---------------------------------------------------------
    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.x == o.x and self.y == o.y

    def __hash__(self):
        return hash((GoldenNum, self.x, self.y))

    def __lt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return gr_sign(self - o) < 0

    def __le__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return gr_sign(self - o) <= 0

    def __gt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return gr_sign(self - o) > 0

    def __ge__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return gr_sign(self - o) >= 0

    def __bool__(self):
        return bool(self.x) or bool(self.y)

    # -- rendering -----------------------------------------------------------
    def to_mpf(self, prec: int | None = None) -> mpmath.mpf:
        return gr_to_float(self, prec if prec is not None else mpmath.mp.prec)

    def __float__(self):
        return float(gr_to_float(self, 64))

    def __repr__(self):
        return f"GoldenNum({_fmt_q(self.x)}, {_fmt_q(self.y)})"

    def __str__(self):
        if self.y == 0:
            return _fmt_q(self.x)
        ytxt = "beta" if self.y == 1 else "-beta" if self.y == -1 else f"{_fmt_q(self.y)}*beta"
        if self.x == 0:
            return ytxt
        if ytxt.startswith("-"):
            return f"{_fmt_q(self.x)} - {ytxt[1:]}"
        return f"{_fmt_q(self.x)} + {ytxt}"

    def as_pair(self) -> tuple[str, str]:
        return _fmt_q(self.x), _fmt_q(self.y)

    # -- parsing -------------------------------------------------------------
    _TERM = re.compile(r"([+-]?)\s*([0-9]+(?:/[0-9]+)?)?\s*\*?\s*(beta|sqrt5)?\s*(?:/\s*([0-9]+))?")

    @classmethod
    def parse(cls, text: str) -> "GoldenNum":
        """Parse ``"x,y"`` or a sum of terms like ``"-1/2 + 3*beta"``, ``"2*sqrt5"``."""
        text = text.strip()
        if "," in text:
            xs, ys = text.split(",", 1)
            return cls(Fraction(xs.strip()), Fraction(ys.strip()))
        total = ZERO
        pos = 0
        body = text.replace(" ", "")
        if not body:
            raise ValueError("empty GoldenNum literal")
        while pos < len(body):
            m = cls._TERM.match(body, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse GoldenNum literal {text!r}")
            sign, coef, unit, div = m.groups()
            if coef is None and unit is None:
                raise ValueError(f"cannot parse GoldenNum literal {text!r}")
            c = Fraction(coef) if coef else Fraction(1)
            if div:
                c /= int(div)
            if sign == "-":
                c = -c
            u = ONE if unit is None else BETA if unit == "beta" else SQRT5
            total = total + u * GoldenNum(c)
            pos = m.end()
        return total


def _fmt_q(v: mpq) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


ZERO = GoldenNum(0, 0)
ONE = GoldenNum(1, 0)
BETA = GoldenNum(0, 1)
SQRT5 = GoldenNum(-1, 2)


def gr_arith(kind: str, a: GoldenNum, b: GoldenNum) -> GoldenNum:
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "div":
        return a / b
    raise ValueError(f"unknown operation {kind!r}")


def gr_conj(a: GoldenNum) -> GoldenNum:
    return a.conj()


def gr_sign(a: GoldenNum) -> int:
    """Exact sign of ``x + y*beta``.

    With ``u = 2x + y`` and ``v = y`` the value is ``(u + v*sqrt5)/2``; mixed
    signs are settled by comparing ``u**2`` against ``5*v**2``.
    """
    u = 2 * a.x + a.y
    v = a.y
    if u >= 0 and v >= 0:
        return 0 if (u == 0 and v == 0) else 1
    if u <= 0 and v <= 0:
        return -1
    cmp = u * u - 5 * v * v
    if u > 0:
        return 1 if cmp > 0 else -1
    return -1 if cmp > 0 else 1


def _rational_to_mpf(q: mpq, prec: int, rnd: str = "n"):
    return mpmath.mp.make_mpf(libmp.from_rational(int(q.numerator), int(q.denominator), prec, rnd))


def gr_to_float(a: GoldenNum, precision_bits: int) -> mpmath.mpf:
    """Render ``a`` as an mpf with ``precision_bits`` of mantissa.

    sqrt 5 is bracketed by integer square roots at increasing scale until the
    bracket for the value is narrower than a quarter ulp.
    """
    if precision_bits < 16:
        raise ValueError("precision_bits must be >= 16")
    if a.y == 0:
        return _rational_to_mpf(a.x, precision_bits)
    u = 2 * a.x + a.y  # value = (u + y*sqrt5)/2
    v = a.y
    k = precision_bits + 16 + max(int(abs(v.numerator)).bit_length(), 1)
    while True:
        r = isqrt(5 << (2 * k))
        scale = mpq(1, 1 << k)
        lo_s, hi_s = r * scale, (r + 1) * scale
        if v > 0:
            lo, hi = (u + v * lo_s) / 2, (u + v * hi_s) / 2
        else:
            lo, hi = (u + v * hi_s) / 2, (u + v * lo_s) / 2
        if lo > 0 or hi < 0:
            mag = min(abs(lo), abs(hi))
            if (hi - lo) * (1 << (precision_bits + 2)) <= mag:
                return _rational_to_mpf((lo + hi) / 2, precision_bits)
        k *= 2


@lru_cache(maxsize=4096)
def fib(n: int) -> int:
    """Fibonacci number F_n (F_0 = 0, F_1 = 1), extended to negative n."""
    if n < 0:
        f = fib(-n)
        return f if (-n) % 2 else -f

    def _doubling(m: int) -> tuple[int, int]:
        if m == 0:
            return 0, 1
        a, b = _doubling(m >> 1)
        c = a * (2 * b - a)
        d = a * a + b * b
        return (d, c + d) if m & 1 else (c, d)

    return _doubling(n)[0]


@lru_cache(maxsize=1024)
def beta_pow(k: int) -> GoldenNum:
    """Exact ``beta**k``; ``beta**k = F_{k-1} + F_k*beta`` for k >= 0."""
    if k >= 0:
        return GoldenNum(fib(k - 1), fib(k))
    return gr_arith("div", ONE, beta_pow(-k))
