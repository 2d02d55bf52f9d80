"""Derivations of O (x) C built from the map D on wedge^2 Im(O).

D(a, b) = 1/4 ([ad_a, ad_b] + ad_[a,b]) is a derivation for every pair; it
descends to a linear map on wedge^2 Im(O) (21-dimensional) whose image is the
14-dimensional Lie algebra g = Der(O) (x) C and whose kernel is spanned by the
seven translates of Delta = e1^e3 + e2^e6 + e4^e5.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Mapping

from . import gf8
from .gf8 import F8Element
from .linalg import Operator, Subspace, inverse, kernel, rank, span
from .octonion import (
    BASIS_ORDER,
    FR,
    M,
    GaloisSymmetry,
    Octonion,
    ad_operator,
    associator,
    commutator,
    e,
    is_imaginary,
    multiply,
    unit,
)
from .scalar import ONE, ZERO, GaussianRational, as_scalar

__all__ = [
    "PAIRS",
    "Wedge2",
    "GElement",
    "D_pair",
    "D_wedge",
    "D_basis",
    "D_matrix",
    "R_pair",
    "closed_form_action",
    "leibniz_defect",
    "is_derivation",
    "kernel_of_D",
    "delta",
    "delta_orbit",
    "b_partition",
    "g_basis",
    "g_coordinates",
    "g_element",
    "g_bracket",
    "ad_matrix",
    "killing_form",
    "killing_gram",
    "symmetry_conjugate",
    "cartan_spans",
]

PAIRS: tuple[tuple[int, int], ...] = tuple(combinations(range(7), 2))
_PAIR_INDEX = {p: k for k, p in enumerate(PAIRS)}


class Wedge2:
    """Element of wedge^2 Im(O) in the basis e_i ^ e_j, 0 <= i < j <= 6."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[tuple[int, int], object] | None = None):
        out: dict[tuple[int, int], GaussianRational] = {}
        for (i, j), c in (coeffs or {}).items():
            i, j = i % 7, j % 7
            if i == j:
                continue
            c = as_scalar(c)
            if i > j:
                i, j, c = j, i, -c
            s = out.get((i, j), ZERO) + c
            if s:
                out[(i, j)] = s
            else:
                out.pop((i, j), None)
        self.coeffs = out

    @classmethod
    def pair(cls, i: int, j: int, c=1) -> Wedge2:
        return cls({(i, j): c})

    @classmethod
    def wedge(cls, a: Octonion, b: Octonion) -> Wedge2:
        """a ^ b for imaginary octonions a, b."""
        if not (is_imaginary(a) and is_imaginary(b)):
            raise ValueError("wedge factors must be imaginary octonions")
        terms: dict = {}
        for i in range(7):
            x = a.coords[i + 1]
            if not x:
                continue
            for j in range(7):
                y = b.coords[j + 1]
                if y and i != j:
                    w = Wedge2({(i, j): x * y})
                    for k, v in w.coeffs.items():
                        terms[k] = terms.get(k, ZERO) + v
        return cls(terms)

    @classmethod
    def from_vector(cls, v: Mapping[int, object]) -> Wedge2:
        return cls({PAIRS[k]: c for k, c in v.items()})

    def vector(self) -> dict:
        return {_PAIR_INDEX[p]: c for p, c in self.coeffs.items()}

    def __add__(self, other: Wedge2) -> Wedge2:
        terms = dict(self.coeffs)
        for p, c in other.coeffs.items():
            terms[p] = terms.get(p, ZERO) + c
        return Wedge2(terms)

    def __sub__(self, other: Wedge2) -> Wedge2:
        return self + (-other)

    def __neg__(self) -> Wedge2:
        return Wedge2({p: -c for p, c in self.coeffs.items()})

    def __rmul__(self, c) -> Wedge2:
        c = as_scalar(c)
        return Wedge2({p: c * x for p, x in self.coeffs.items()})

    __mul__ = __rmul__

    def apply_symmetry(self, tau: GaloisSymmetry) -> Wedge2:
        return Wedge2(
            {(tau.map_index(i), tau.map_index(j)): c for (i, j), c in self.coeffs.items()}
        )

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Wedge2) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self) -> str:
        terms = " + ".join(f"({c})e{i}^e{j}" for (i, j), c in sorted(self.coeffs.items()))
        return f"Wedge2({terms or '0'})"


# ---------------------------------------------------------------------------
# the map D


def D_pair(a: Octonion, b: Octonion) -> Operator:
    ad_a, ad_b = ad_operator(a), ad_operator(b)
    return (ad_a.commutator(ad_b) + ad_operator(commutator(a, b))) / 4


def R_pair(a: Octonion, b: Octonion) -> Operator:
    ad_a, ad_b = ad_operator(a), ad_operator(b)
    return ad_a.commutator(ad_b) - ad_operator(commutator(a, b))


@lru_cache(maxsize=None)
def D_basis(i: int, j: int) -> Operator:
    """e_ij = D(e_i ^ e_j)."""
    i, j = i % 7, j % 7
    return D_pair(e(i), e(j))


def D_wedge(w: Wedge2) -> Operator:
    out = Operator.zero(8)
    for (i, j), c in w.coeffs.items():
        out = out + D_basis(i, j) * c
    return out


@lru_cache(maxsize=None)
def D_matrix() -> tuple[tuple[GaussianRational, ...], ...]:
    """64 x 21 matrix of D: column k is D(PAIRS[k]) flattened row-major."""
    cols = [D_basis(i, j).flatten() for i, j in PAIRS]
    return tuple(zip(*cols))


def closed_form_action(x: F8Element, y: F8Element, z: F8Element) -> Octonion:
    """Closed form of D(e^x ^ e^y) e^z, independent of the commutator formula."""
    if not x or not y or x == y:
        raise ValueError("need distinct nonzero x, y")
    if z == x:
        return 2 * unit(y)
    if z == y:
        return -2 * unit(x)
    if not z or z == x + y:
        return Octonion()
    return -multiply(multiply(unit(x), unit(y)), unit(z))


def leibniz_defect(op: Operator, a: Octonion, b: Octonion) -> Octonion:
    """op(a) b + a op(b) - op(ab)."""
    return (
        multiply(a.transform(op), b)
        + multiply(a, b.transform(op))
        - multiply(a, b).transform(op)
    )


def is_derivation(op: Operator) -> bool:
    units = [unit(x) for x in BASIS_ORDER]
    return not any(leibniz_defect(op, a, b) for a in units for b in units)


def associator_operator(a: Octonion, b: Octonion) -> Operator:
    """Matrix of c -> [a, b, c]."""
    cols = [associator(a, b, unit(x)).coords for x in BASIS_ORDER]
    return Operator(list(zip(*cols)))


# ---------------------------------------------------------------------------
# kernel and the B_k partition


@lru_cache(maxsize=None)
def kernel_of_D() -> Subspace:
    """ker D inside wedge^2 Im(O), in PAIRS coordinates."""
    return kernel(D_matrix())


def delta() -> Wedge2:
    return Wedge2({(1, 3): 1, (2, 6): 1, (4, 5): 1})


def delta_orbit() -> tuple[Wedge2, ...]:
    d = delta()
    return tuple(d.apply_symmetry(GaloisSymmetry(0, k)) for k in range(7))


def b_partition() -> tuple[frozenset[tuple[int, int]], ...]:
    """B_0..B_6 as sets of index pairs (i < j)."""
    b0 = []
    pair = (1, 3)
    for _ in range(3):
        b0.append(tuple(sorted(pair)))
        pair = (FR.map_index(pair[0]), FR.map_index(pair[1]))
    parts = []
    for k in range(7):
        mk = GaloisSymmetry(0, k)
        parts.append(
            frozenset(tuple(sorted((mk.map_index(i), mk.map_index(j)))) for i, j in b0)
        )
    return tuple(parts)


# ---------------------------------------------------------------------------
# the Lie algebra g


@dataclass(frozen=True)
class GElement:
    """An element of g: its 8x8 matrix and its coordinates in ``g_basis()``."""

    op: Operator
    coords: tuple

    def __add__(self, other: GElement) -> GElement:
        return GElement(self.op + other.op, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: GElement) -> GElement:
        return GElement(self.op - other.op, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> GElement:
        return GElement(-self.op, tuple(-a for a in self.coords))

    def __rmul__(self, c) -> GElement:
        c = as_scalar(c)
        return GElement(self.op * c, tuple(c * a for a in self.coords))

    __mul__ = __rmul__

    def __truediv__(self, c) -> GElement:
        return self * (ONE / as_scalar(c))

    def __bool__(self) -> bool:
        return not self.op.is_zero()

    def __call__(self, a: Octonion) -> Octonion:
        return a.transform(self.op)


@dataclass(frozen=True)
class _GFrame:
    pairs: tuple[tuple[int, int], ...]
    ops: tuple[Operator, ...]
    subspace: Subspace
    solver: Operator  # maps pivot entries of a flattened op to g-coordinates


@lru_cache(maxsize=None)
def _frame() -> _GFrame:
    chosen, ops, flats = [], [], []
    for i, j in PAIRS:
        op = D_basis(i, j)
        flat = op.flatten()
        if rank(flats + [flat]) > len(flats):
            chosen.append((i, j))
            ops.append(op)
            flats.append(flat)
    sub = span(flats, 64)
    # square system: restrict each basis op to the pivot slots of the span
    restricted = Operator([[f[p] for f in flats] for p in sub.pivots])
    return _GFrame(tuple(chosen), tuple(ops), sub, inverse(restricted))


def g_basis_pairs() -> tuple[tuple[int, int], ...]:
    """Index pairs (i, j) whose e_ij form the canonical basis of g."""
    return _frame().pairs


def g_coordinates(op: Operator) -> tuple:
    fr = _frame()
    flat = op.flatten()
    vec = {k: c for k, c in enumerate(flat) if c}
    if not fr.subspace.contains(vec):
        raise ValueError("operator is not in g = Der(O) (x) C")
    return fr.solver(tuple(flat[p] for p in fr.subspace.pivots))


def g_element(op: Operator) -> GElement:
    return GElement(op, g_coordinates(op))


@lru_cache(maxsize=None)
def g_basis() -> tuple[GElement, ...]:
    ops = _frame().ops
    n = len(ops)
    return tuple(
        GElement(op, tuple(ONE if k == j else ZERO for k in range(n)))
        for j, op in enumerate(ops)
    )


def g_from_coordinates(coords) -> GElement:
    op = Operator.zero(8)
    for c, b in zip(coords, g_basis()):
        if c:
            op = op + b.op * c
    return GElement(op, tuple(as_scalar(c) for c in coords))


def g_bracket(x: GElement, y: GElement) -> GElement:
    return g_element(x.op.commutator(y.op))


@lru_cache(maxsize=None)
def _basis_ad() -> tuple[Operator, ...]:
    basis = g_basis()
    return tuple(
        Operator(list(zip(*[g_bracket(b, c).coords for c in basis]))) for b in basis
    )


def ad_matrix(x: GElement) -> Operator:
    """Adjoint action of x on g in ``g_basis()`` coordinates."""
    out = Operator.zero(len(x.coords))
    for c, a in zip(x.coords, _basis_ad()):
        if c:
            out = out + a * c
    return out


def killing_form(x: GElement, y: GElement) -> GaussianRational:
    return (ad_matrix(x) @ ad_matrix(y)).trace()


def killing_gram(elements: Iterable[GElement]) -> Operator:
    elements = list(elements)
    return Operator([[killing_form(a, b) for b in elements] for a in elements])


def symmetry_conjugate(tau: GaloisSymmetry, x: GElement | Operator):
    """tau o x o tau^-1."""
    op = x.op if isinstance(x, GElement) else x
    conj = tau.operator() @ op @ tau.inverse().operator()
    return g_element(conj) if isinstance(x, GElement) else conj


def cartan_spans() -> tuple[Subspace, ...]:
    """Span of D(B_k) in g-coordinates, for k = 0..6."""
    out = []
    for part in b_partition():
        out.append(span([g_coordinates(D_basis(i, j)) for i, j in sorted(part)], 14))
    return tuple(out)


def anticommuting_pairs(x: F8Element, y: F8Element):
    """All (u, v) with u + x + y and v distinct elements of F_8^*."""
    for u in gf8.ELEMENTS:
        s = u + x + y
        for v in gf8.NONZERO:
            if s and s != v:
                yield u, v
