"""Exact Gaussian rationals a + b*i with a, b in Q."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from numbers import Rational

__all__ = ["GaussianRational", "I", "ZERO", "ONE", "as_scalar", "to_json", "from_json"]


class GaussianRational:
    """An element of Q(i).

    Both parts are :class:`fractions.Fraction`, which keeps them reduced with a
    positive denominator, so equality is componentwise.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    @classmethod
    def _make(cls, re: Fraction, im: Fraction) -> GaussianRational:
        z = object.__new__(cls)
        z.re = re
        z.im = im
        return z

    # arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if type(other) is GaussianRational:
            return GaussianRational._make(self.re + other.re, self.im + other.im)
        if isinstance(other, Rational):
            return GaussianRational._make(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if type(other) is GaussianRational:
            return GaussianRational._make(self.re - other.re, self.im - other.im)
        if isinstance(other, Rational):
            return GaussianRational._make(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, Rational):
            return GaussianRational._make(other - self.re, -self.im)
        return NotImplemented

    def __mul__(self, other):
        if type(other) is GaussianRational:
            a, b, c, d = self.re, self.im, other.re, other.im
            if not b:
                if not d:
                    return GaussianRational._make(a * c, _ZF)
                return GaussianRational._make(a * c, a * d)
            if not d:
                return GaussianRational._make(a * c, b * c)
            return GaussianRational._make(a * c - b * d, a * d + b * c)
        if isinstance(other, Rational):
            return GaussianRational._make(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Rational) and type(other) is not GaussianRational:
            if not other:
                raise ZeroDivisionError("division by zero in Q(i)")
            return GaussianRational._make(self.re / other, self.im / other)
        if type(other) is not GaussianRational:
            return NotImplemented
        c, d = other.re, other.im
        if not d:
            if not c:
                raise ZeroDivisionError("division by zero in Q(i)")
            return GaussianRational._make(self.re / c, self.im / c)
        n = c * c + d * d
        a, b = self.re, self.im
        return GaussianRational._make((a * c + b * d) / n, (b * c - a * d) / n)

    def __rtruediv__(self, other):
        if isinstance(other, Rational):
            return GaussianRational(other) / self
        return NotImplemented

    def __neg__(self):
        return GaussianRational._make(-self.re, -self.im)

    def __pos__(self):
        return self

    def conjugate(self) -> GaussianRational:
        return GaussianRational._make(self.re, -self.im)

    def norm(self) -> Fraction:
        """|z|^2 = re^2 + im^2."""
        return self.re * self.re + self.im * self.im

    # comparison / hashing -----------------------------------------------

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if type(other) is GaussianRational:
            return self.re == other.re and self.im == other.im
        if isinstance(other, Rational):
            return not self.im and self.re == other
        if isinstance(other, complex):
            return self.re == other.real and self.im == other.imag
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def is_real(self) -> bool:
        return not self.im

    def is_integral(self) -> bool:
        return self.re.denominator == 1 and self.im.denominator == 1

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussianRational({self})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return _imag_str(self.im)
        sign = "-" if self.im < 0 else "+"
        return f"{self.re}{sign}{_imag_str(abs(self.im))}"


def _imag_str(q: Fraction) -> str:
    if q == 1:
        return "i"
    if q == -1:
        return "-i"
    if q.denominator == 1:
        return f"{q}i"
    num = {1: "", -1: "-"}.get(q.numerator, str(q.numerator))
    return f"{num}i/{q.denominator}"


_ZF = Fraction(0)
ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def as_scalar(x) -> GaussianRational:
    """Coerce ints, Fractions, and Python complex with integral parts."""
    if type(x) is GaussianRational:
        return x
    if isinstance(x, Rational):
        return GaussianRational(x)
    if isinstance(x, complex):
        re, im = x.real, x.imag
        if re != int(re) or im != int(im):
            raise ValueError(f"refusing to coerce inexact complex {x!r}")
        return GaussianRational(int(re), int(im))
    raise TypeError(f"cannot interpret {x!r} as a Gaussian rational")


def _q_json(q: Fraction) -> dict:
    return {"num": str(q.numerator), "den": str(q.denominator)}


def to_json(z: GaussianRational) -> dict:
    z = as_scalar(z)
    return {"re": _q_json(z.re), "im": _q_json(z.im)}


def from_json(obj: dict) -> GaussianRational:
    def q(part):
        num, den = int(part["num"]), int(part["den"])
        if den <= 0 or gcd(num, den) != 1:
            raise ValueError(f"non-canonical rational {num}/{den}")
        return Fraction(num, den)

    return GaussianRational(q(obj["re"]), q(obj["im"]))
