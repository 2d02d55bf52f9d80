"""Complexified octonions as a twisted group algebra of (F_8, +).

The basis is {e^x : x in F_8} with e^x e^y = (-1)^phi(x, y) e^(x+y).
Coordinates are ordered as (e^0, e_0, e_1, ..., e_6) where e_i = e^(a^i);
e^0 is the identity, which is *not* the unit e_0 = e^1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from . import gf8
from .gf8 import F8Element
from .linalg import Operator
from .scalar import ONE, ZERO, GaussianRational, as_scalar

__all__ = [
    "BASIS_ORDER",
    "Octonion",
    "GaloisSymmetry",
    "IDENTITY",
    "FR",
    "M",
    "position",
    "basis_product",
    "multiplication_table",
    "unit",
    "e",
    "multiply",
    "commutator",
    "associator",
    "ad_operator",
    "complex_conjugate",
    "galois_apply",
    "imaginary_part",
    "is_imaginary",
    "norm",
]

BASIS_ORDER: tuple[F8Element, ...] = (gf8.ZERO,) + gf8.NONZERO
_POS = {x: k for k, x in enumerate(BASIS_ORDER)}


def position(x: F8Element) -> int:
    """Coordinate slot of e^x."""
    return _POS[x]


def basis_product(x: F8Element, y: F8Element) -> tuple[int, F8Element]:
    """(sign, x + y) such that e^x e^y = sign * e^(x+y)."""
    return (-1 if gf8.phi(x, y) else 1), x + y


@lru_cache(maxsize=None)
def multiplication_table() -> tuple[tuple[tuple[int, int], ...], ...]:
    """8x8 table of (sign, slot) in coordinate order."""
    return tuple(
        tuple(
            (s, _POS[z]) for s, z in (basis_product(x, y) for y in BASIS_ORDER)
        )
        for x in BASIS_ORDER
    )


class Octonion:
    """An element of O (x) C, stored as 8 exact coordinates."""

    __slots__ = ("coords",)

    def __init__(self, coords: Sequence = None):
        if coords is None:
            coords = (ZERO,) * 8
        coords = tuple(as_scalar(c) for c in coords)
        if len(coords) != 8:
            raise ValueError(f"an octonion has 8 coordinates, got {len(coords)}")
        self.coords = coords

    @classmethod
    def from_dict(cls, terms: dict) -> Octonion:
        """Build from {F8Element: coefficient}."""
        c = [ZERO] * 8
        for x, a in terms.items():
            c[_POS[x]] += as_scalar(a)
        return cls(c)

    def __getitem__(self, x: F8Element) -> GaussianRational:
        return self.coords[_POS[x]]

    def __add__(self, other: Octonion) -> Octonion:
        return Octonion(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other: Octonion) -> Octonion:
        return Octonion(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self) -> Octonion:
        return Octonion(-a for a in self.coords)

    def __mul__(self, other):
        if isinstance(other, Octonion):
            return multiply(self, other)
        c = as_scalar(other)
        return Octonion(c * a for a in self.coords)

    def __rmul__(self, c):
        c = as_scalar(c)
        return Octonion(c * a for a in self.coords)

    def __truediv__(self, c):
        return self * (ONE / as_scalar(c))

    def __bool__(self) -> bool:
        return any(self.coords)

    def __eq__(self, other) -> bool:
        return isinstance(other, Octonion) and self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def transform(self, op: Operator) -> Octonion:
        return Octonion(op(self.coords))

    def __repr__(self) -> str:
        return f"Octonion({self})"

    def __str__(self) -> str:
        names = ("u",) + tuple(f"e{i}" for i in range(7))
        terms = []
        for name, c in zip(names, self.coords):
            if not c:
                continue
            if c == 1:
                terms.append(name)
            elif c == -1:
                terms.append(f"-{name}")
            elif c.re and c.im:
                terms.append(f"({c}){name}")
            else:
                terms.append(f"{c}*{name}")
        return " + ".join(terms).replace("+ -", "- ") or "0"


def unit(x: F8Element) -> Octonion:
    """The basis element e^x."""
    c = [ZERO] * 8
    c[_POS[x]] = ONE
    return Octonion(c)


def e(i: int) -> Octonion:
    """The imaginary unit e_i = e^(a^i), index read mod 7."""
    return unit(gf8.alpha_power(i))


def multiply(a: Octonion, b: Octonion) -> Octonion:
    table = multiplication_table()
    out = [ZERO] * 8
    for i, x in enumerate(a.coords):
        if not x:
            continue
        row = table[i]
        for j, y in enumerate(b.coords):
            if not y:
                continue
            s, k = row[j]
            p = x * y
            out[k] = out[k] + p if s > 0 else out[k] - p
    return Octonion(out)


def commutator(a: Octonion, b: Octonion) -> Octonion:
    return multiply(a, b) - multiply(b, a)


def associator(a: Octonion, b: Octonion, c: Octonion) -> Octonion:
    return multiply(multiply(a, b), c) - multiply(a, multiply(b, c))


def _basis_ops(fn) -> Operator:
    # column k is the image of the k-th basis element
    cols = [fn(unit(x)).coords for x in BASIS_ORDER]
    return Operator(list(zip(*cols)))


def ad_operator(a: Octonion) -> Operator:
    """Matrix of b -> [a, b]."""
    return _basis_ops(lambda b: commutator(a, b))


def left_operator(a: Octonion) -> Operator:
    return _basis_ops(lambda b: multiply(a, b))


def complex_conjugate(a: Octonion) -> Octonion:
    return Octonion(c.conjugate() for c in a.coords)


def imaginary_part(a: Octonion) -> Octonion:
    return Octonion((ZERO,) + a.coords[1:])


def is_imaginary(a: Octonion) -> bool:
    return not a.coords[0]


def norm(a: Octonion) -> GaussianRational:
    """Sum of squares of coordinates (the bilinear norm, not the Hermitian one)."""
    return sum((c * c for c in a.coords), ZERO)


# ---------------------------------------------------------------------------
# the order-21 group generated by Frobenius and multiplication by a


@dataclass(frozen=True)
class GaloisSymmetry:
    """The field map x -> a^shift * x^(2^frob) of F_8.

    On exponents this is i -> 2^frob * i + shift (mod 7), so ``FR`` is
    (1, 0), ``M`` is (0, 1), and the group they generate has order 21.
    """

    frob: int = 0
    shift: int = 0

    def __post_init__(self):
        object.__setattr__(self, "frob", self.frob % 3)
        object.__setattr__(self, "shift", self.shift % 7)

    def __call__(self, x: F8Element) -> F8Element:
        if not x:
            return x
        return gf8.alpha_power(self.map_index(gf8.alpha_index(x)))

    def map_index(self, i: int) -> int:
        return ((1 << self.frob) * i + self.shift) % 7

    def __matmul__(self, other: GaloisSymmetry) -> GaloisSymmetry:
        """Composition: (self @ other)(x) = self(other(x))."""
        return GaloisSymmetry(
            self.frob + other.frob, (1 << self.frob) * other.shift + self.shift
        )

    def inverse(self) -> GaloisSymmetry:
        f = (3 - self.frob) % 3
        return GaloisSymmetry(f, -(1 << f) * self.shift)

    @classmethod
    def from_word(cls, word: str | Sequence[str]) -> GaloisSymmetry:
        """Compose generators left to right as maps: "Fr M" means Fr after M."""
        if isinstance(word, str):
            word = word.replace("*", " ").split()
        g = cls()
        for letter in word:
            if letter == "Fr":
                g = g @ FR
            elif letter == "M":
                g = g @ M
            else:
                raise ValueError(f"unknown generator {letter!r}; use 'Fr' or 'M'")
        return g

    @staticmethod
    def group() -> tuple[GaloisSymmetry, ...]:
        return tuple(GaloisSymmetry(f, m) for f in range(3) for m in range(7))

    def operator(self) -> Operator:
        """Permutation matrix of e^x -> e^(tau x)."""
        return _basis_ops(lambda a: galois_apply(self, a))

    def __str__(self) -> str:
        parts = [f"M^{self.shift}"] if self.shift else []
        if self.frob:
            parts.append(f"Fr^{self.frob}")
        return "*".join(parts) or "id"


IDENTITY = GaloisSymmetry(0, 0)
FR = GaloisSymmetry(1, 0)
M = GaloisSymmetry(0, 1)


def galois_apply(tau: GaloisSymmetry, a: Octonion) -> Octonion:
    out = [ZERO] * 8
    for x, c in zip(BASIS_ORDER, a.coords):
        out[_POS[tau(x)]] = c
    return Octonion(out)
