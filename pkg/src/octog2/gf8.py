"""Arithmetic in the field F_8 = F_2[a] / (a^3 + a + 1).

Elements are stored as 3-bit integers: bit k is the coefficient of a^k.
The multiplicative group is cyclic of order 7, generated by ``ALPHA``.
"""

from __future__ import annotations

from functools import total_ordering

__all__ = [
    "F8Element",
    "ZERO",
    "ONE",
    "ALPHA",
    "ELEMENTS",
    "NONZERO",
    "add",
    "mul",
    "power",
    "inverse",
    "trace",
    "phi",
    "frobenius",
    "mtwist",
    "alpha_index",
    "alpha_power",
]


def _mul_bits(x: int, y: int) -> int:
    r = 0
    for k in range(3):
        if (y >> k) & 1:
            r ^= x << k
    # a^4 = a^2 + a, a^3 = a + 1
    if r & 0b10000:
        r ^= 0b10110
    if r & 0b1000:
        r ^= 0b1011
    return r


@total_ordering
class F8Element:
    """An element c0 + c1*a + c2*a^2 of F_8, with a^3 = a + 1."""

    __slots__ = ("bits",)

    def __init__(self, bits: int | tuple[int, int, int]):
        if isinstance(bits, tuple):
            if len(bits) != 3 or any(c not in (0, 1) for c in bits):
                raise ValueError(f"expected three F_2 coefficients, got {bits!r}")
            bits = bits[0] | (bits[1] << 1) | (bits[2] << 2)
        if not 0 <= bits < 8:
            raise ValueError(f"F_8 element out of range: {bits}")
        object.__setattr__(self, "bits", bits)

    def __setattr__(self, name, value):
        raise AttributeError("F8Element is immutable")

    @property
    def coefficients(self) -> tuple[int, int, int]:
        return (self.bits & 1, (self.bits >> 1) & 1, (self.bits >> 2) & 1)

    def __add__(self, other: F8Element) -> F8Element:
        return _TABLE[self.bits ^ other.bits]

    __sub__ = __add__

    def __neg__(self) -> F8Element:
        return self

    def __mul__(self, other: F8Element) -> F8Element:
        return _TABLE[_MUL[self.bits][other.bits]]

    def __pow__(self, k: int) -> F8Element:
        return power(self, k)

    def __bool__(self) -> bool:
        return self.bits != 0

    def __eq__(self, other) -> bool:
        return isinstance(other, F8Element) and self.bits == other.bits

    def __lt__(self, other: F8Element) -> bool:
        return self.bits < other.bits

    def __hash__(self) -> int:
        return hash(("F8", self.bits))

    def __repr__(self) -> str:
        return f"F8Element({self})"

    def __str__(self) -> str:
        if not self.bits:
            return "0"
        i = _LOG[self.bits]
        return {0: "1", 1: "a"}.get(i, f"a^{i}")


_MUL = [[_mul_bits(x, y) for y in range(8)] for x in range(8)]
_TABLE = [object.__new__(F8Element) for _ in range(8)]
for _b, _el in enumerate(_TABLE):
    object.__setattr__(_el, "bits", _b)

ZERO = _TABLE[0]
ONE = _TABLE[1]
ALPHA = _TABLE[2]

# discrete log / antilog tables, derived once from repeated multiplication
_EXP = [1]
for _ in range(6):
    _EXP.append(_MUL[_EXP[-1]][2])
_LOG = {b: i for i, b in enumerate(_EXP)}

ELEMENTS: tuple[F8Element, ...] = tuple(_TABLE)
# ordered as a^0, a^1, ..., a^6
NONZERO: tuple[F8Element, ...] = tuple(_TABLE[b] for b in _EXP)


def add(x: F8Element, y: F8Element) -> F8Element:
    return x + y


def mul(x: F8Element, y: F8Element) -> F8Element:
    return x * y


def alpha_power(i: int) -> F8Element:
    """Return a^i; the exponent is read modulo 7."""
    return _TABLE[_EXP[i % 7]]


def alpha_index(x: F8Element) -> int:
    """The unique i in 0..6 with x = a^i."""
    if not x:
        raise ValueError("0 is not a power of a")
    return _LOG[x.bits]


def power(x: F8Element, k: int) -> F8Element:
    if not x:
        if k < 0:
            raise ZeroDivisionError("0 has no negative powers in F_8")
        return ONE if k == 0 else ZERO
    return alpha_power(alpha_index(x) * k)


def inverse(x: F8Element) -> F8Element:
    return power(x, -1)


def trace(x: F8Element) -> int:
    """Absolute trace x + x^2 + x^4, returned as 0 or 1."""
    t = x + power(x, 2) + power(x, 4)
    if t.bits > 1:
        raise AssertionError(f"trace of {x} left F_2")
    return t.bits


def phi(x: F8Element, y: F8Element) -> int:
    """Sign exponent tr(y * x^6) twisting the octonion product."""
    return trace(y * power(x, 6))


def frobenius(x: F8Element) -> F8Element:
    return x * x


def mtwist(x: F8Element) -> F8Element:
    return ALPHA * x
