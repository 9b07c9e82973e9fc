"""Exact Gaussian-rational scalars.

Every symbolic computation in this package runs over Q(i), the field of
complex numbers a + b*i with rational a, b.  Arithmetic is exact: no
rounding ever happens, and denominators are kept reduced by Fraction.
"""

from __future__ import annotations

import re as _re
from fractions import Fraction


class Scalar:
    """A Gaussian-rational number re + im*i with exact Fraction parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_real(self) -> bool:
        return not self.im

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(x) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        if isinstance(x, (int, Fraction)):
            return Scalar(x)
        raise TypeError(f"cannot coerce {x!r} to Scalar")

    def __add__(self, other):
        other = self._coerce(other)
        return Scalar(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self.re, -self.im)

    def __sub__(self, other):
        other = self._coerce(other)
        return Scalar(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return Scalar(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        n = other.abs2()
        if not n:
            raise ZeroDivisionError("division by zero Scalar")
        return Scalar(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("Scalar exponent must be an integer")
        if n < 0:
            return (Scalar(1) / self) ** (-n)
        out = Scalar(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conj(self) -> "Scalar":
        return Scalar(self.re, -self.im)

    def abs2(self) -> Fraction:
        """|z|^2, an exact rational."""
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "Scalar":
        return Scalar(1) / self

    # -- comparison / hashing -----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Scalar(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    # -- text ---------------------------------------------------------------

    def __str__(self):
        if not self.im:
            return str(self.re)
        if self.im == 1:
            imtxt = "i"
        elif self.im == -1:
            imtxt = "-i"
        else:
            imtxt = f"{self.im}i"
        if not self.re:
            return imtxt
        sign = "+" if self.im > 0 else "-"
        mag = abs(self.im)
        imtxt = "i" if mag == 1 else f"{mag}i"
        return f"{self.re}{sign}{imtxt}"

    def __repr__(self):
        return f"Scalar('{self}')"

    _TERM = _re.compile(r"([+-]?)(\d+(?:/\d+)?)?(i)?")

    @classmethod
    def parse(cls, text: str) -> "Scalar":
        """Parse strings like '5/2', '-i', '3/4i', '1+2i', '1/2-3i'."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty Scalar literal")
        re_part = Fraction(0)
        im_part = Fraction(0)
        pos = 0
        while pos < len(s):
            m = cls._TERM.match(s, pos)
            if m is None or m.end() == pos:
                raise ValueError(f"bad Scalar literal: {text!r}")
            sign, num, imag = m.groups()
            if num is None and imag is None:
                raise ValueError(f"bad Scalar literal: {text!r}")
            val = Fraction(num) if num is not None else Fraction(1)
            if sign == "-":
                val = -val
            if imag:
                im_part += val
            else:
                re_part += val
            pos = m.end()
        return cls(re_part, im_part)

    def to_complex(self) -> complex:
        return complex(self.re) + 1j * complex(self.im)


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)


def as_scalar(x) -> Scalar:
    """Coerce int / Fraction / Scalar to Scalar."""
    return Scalar._coerce(x)


def falling_factorial(x, n: int):
    """x^(n) = x (x-1) ... (x-n+1); works for int, Fraction and Scalar x."""
    if n < 0:
        raise ValueError("falling factorial needs n >= 0")
    out = x - x + 1 if not isinstance(x, int) else 1
    for k in range(n):
        out = out * (x - k)
    return out


def binomial(m, k: int):
    """Generalized binomial coefficient m^(k)/k!; integer for integer m.

    Supports negative integer m (e.g. binomial(-1, k) == (-1)**k), Fraction
    and Scalar arguments.
    """
    if k < 0:
        return 0
    num = falling_factorial(m, k)
    den = 1
    for j in range(2, k + 1):
        den *= j
    if isinstance(num, int):
        q, r = divmod(num, den)
        if r:
            raise ArithmeticError("integer binomial did not divide evenly")
        return q
    if isinstance(num, Scalar):
        return num / Scalar(den)
    return num / den
