"""Root data of g2 in the realization fixed by H_beta and H_gamma.

A weight is recorded as the integer pair (m, n) of its values on the coroots
H_beta and H_gamma.  Frobenius rotates the roots by 120 degrees
anticlockwise (beta -> beta' -> beta'') and complex conjugation negates them.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "RootLabel",
    "RootVector",
    "BETA",
    "GAMMA",
    "SHORT_ROOTS",
    "LONG_ROOTS",
    "ALL_ROOTS",
    "POSITIVE_ROOTS",
    "cartan_matrix",
    "root_coordinates",
    "label_of",
    "is_root",
    "frobenius_coordinates",
    "simple_root_expansion",
    "is_dominated_by",
    "squared_length",
    "anticlockwise",
]

RootVector = tuple[int, int]

_BASE = {"short": "beta", "long": "gamma"}


@dataclass(frozen=True, order=True)
class RootLabel:
    """One of +-beta, +-beta', +-beta'', +-gamma, +-gamma', +-gamma''."""

    kind: str  # "short" or "long"
    twist: int = 0  # number of Frobenius primes
    sign: int = 1

    def __post_init__(self):
        if self.kind not in _BASE:
            raise ValueError(f"kind must be 'short' or 'long', got {self.kind!r}")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        object.__setattr__(self, "twist", self.twist % 3)

    @property
    def base(self) -> str:
        return _BASE[self.kind]

    @property
    def is_short(self) -> bool:
        return self.kind == "short"

    def prime(self, times: int = 1) -> RootLabel:
        """Image under Frobenius."""
        return RootLabel(self.kind, self.twist + times, self.sign)

    def __neg__(self) -> RootLabel:
        return RootLabel(self.kind, self.twist, -self.sign)

    @property
    def coordinates(self) -> RootVector:
        return root_coordinates(self)

    def __str__(self) -> str:
        return ("-" if self.sign < 0 else "") + self.base + "'" * self.twist

    def __repr__(self) -> str:
        return f"RootLabel({self})"

    @classmethod
    def parse(cls, text: str) -> RootLabel:
        m = re.fullmatch(r"\s*([+-]?)\s*(beta|gamma|b|g)('{0,2})\s*", text)
        if not m:
            raise ValueError(f"cannot parse root label {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        kind = "short" if m.group(2).startswith("b") else "long"
        return cls(kind, len(m.group(3)), sign)


BETA = RootLabel("short")
GAMMA = RootLabel("long")

SHORT_ROOTS = tuple(RootLabel("short", t, s) for s in (1, -1) for t in range(3))
LONG_ROOTS = tuple(RootLabel("long", t, s) for s in (1, -1) for t in range(3))
ALL_ROOTS = SHORT_ROOTS + LONG_ROOTS

# frozen table; the test suite checks it against coroot eigenvalues
_COORDS: dict[RootLabel, RootVector] = {}
for _lab, _v in [
    (RootLabel("short", 0), (2, -1)),
    (RootLabel("short", 1), (-1, 1)),
    (RootLabel("short", 2), (-1, 0)),
    (RootLabel("long", 0), (-3, 2)),
    (RootLabel("long", 1), (0, -1)),
    (RootLabel("long", 2), (3, -1)),
]:
    _COORDS[_lab] = _v
    _COORDS[-_lab] = (-_v[0], -_v[1])
_LABELS = {v: k for k, v in _COORDS.items()}


def cartan_matrix() -> tuple[tuple[int, int], tuple[int, int]]:
    """Rows beta, gamma; columns are values on H_beta, H_gamma."""
    return (_COORDS[BETA], _COORDS[GAMMA])


def root_coordinates(label: RootLabel) -> RootVector:
    return _COORDS[label]


def label_of(v: RootVector) -> RootLabel | None:
    return _LABELS.get(tuple(v))


def is_root(v: RootVector) -> bool:
    return tuple(v) in _LABELS


def frobenius_coordinates(v: RootVector) -> RootVector:
    """The 120-degree rotation on (m, n) coordinates: beta -> beta', gamma -> gamma'."""
    m, n = v
    return (-2 * m - 3 * n, m + n)


def simple_root_expansion(v: RootVector) -> tuple[int, int]:
    """(x, y) with v = x*beta + y*gamma."""
    m, n = v
    # inverse of the Cartan matrix (determinant 1)
    return (2 * m + 3 * n, m + 2 * n)


POSITIVE_ROOTS = tuple(
    lab for lab in ALL_ROOTS if min(simple_root_expansion(_COORDS[lab])) >= 0
)


def is_dominated_by(mu: RootVector, lam: RootVector) -> bool:
    """lam - mu is a non-negative integer combination of beta and gamma."""
    x, y = simple_root_expansion((lam[0] - mu[0], lam[1] - mu[1]))
    return x >= 0 and y >= 0


def squared_length(v: RootVector) -> Fraction:
    """Invariant form normalized so short roots have squared length 2."""
    x, y = simple_root_expansion(v)
    # Gram matrix in the (beta, gamma) basis: (beta,beta)=2, (gamma,gamma)=6, (beta,gamma)=-3
    return Fraction(2 * x * x - 6 * x * y + 6 * y * y)


def anticlockwise(src: RootVector, dst: RootVector) -> bool:
    """True when turning from src to dst is an anticlockwise rotation by less than pi.

    Drawn in the plane with beta = (2, 0) and gamma = (-3, sqrt 3), the basis is
    positively oriented, so the sign of the cross product equals the sign of
    the determinant in simple-root coordinates.
    """
    x1, y1 = simple_root_expansion(src)
    x2, y2 = simple_root_expansion(dst)
    return x1 * y2 - x2 * y1 > 0
