"""Irreducible g2-modules inside Weyl modules of the standard representation.

For the two-row partition (a+b, b) a tableau filling with entries in V is
placed into the tensor power of V of degree n = a + 2b, column by column
(top entry, then bottom entry, for each of the b long columns; then the
remaining top-row entries).  The Young projector realizes S_lambda(V) as a
subspace of that tensor power, and the irreducible module Gamma_{a,b} is the
g-submodule generated by the highest weight vector w_lambda.

All constructions are exact.  Tensor indices refer to a basis of V: either the
imaginary units e_0..e_6 ("standard") or the weight vectors in
``standard_rep.WEIGHT_LABELS`` order ("weight").  The Young projector and the
diagonal action do not depend on the choice, because S_n commutes with
GL(V); the weight basis keeps every Chevalley generator integral and every
tensor basis element a weight vector, so :func:`generate_irrep` uses it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from math import factorial, prod
from typing import Mapping, Sequence

from .chevalley import chevalley_basis, E_vector
from .derivations import GElement
from .linalg import Operator, Subspace, closure_under, span
from .octonion import Octonion
from .roots import BETA, POSITIVE_ROOTS, RootVector, is_dominated_by
from .scalar import ONE, ZERO, GaussianRational, as_scalar
from .standard_rep import (
    WEIGHT_LABELS,
    in_weight_basis,
    restrict_to_V,
    weight_coordinates,
    weight_vector,
)

__all__ = [
    "TwoRowShape",
    "TableauFilling",
    "TensorVector",
    "DegreeBoundExceeded",
    "tensor_embed",
    "young_project",
    "exchange_check",
    "v_operator",
    "diagonal_action",
    "highest_weight_vector",
    "IrrepResult",
    "generate_irrep",
    "weyl_dimension",
    "schur_dimension",
    "hook_length_count",
    "schur_image",
    "wedge2_split",
]

DIM_V = 7


class DegreeBoundExceeded(ValueError):
    pass


@dataclass(frozen=True)
class TwoRowShape:
    """The partition (a + b, b), with tensor factor layout fixed by ``layout``.

    ``layout="column"`` (the default) orders factors column by column;
    ``layout="row"`` puts the first row before the second.
    """

    a: int
    b: int
    layout: str = "column"

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise ValueError("a and b must be non-negative")
        if self.layout not in ("column", "row"):
            raise ValueError(f"unknown layout {self.layout!r}")

    @property
    def partition(self) -> tuple[int, int]:
        return (self.a + self.b, self.b)

    @property
    def n(self) -> int:
        return self.a + 2 * self.b

    @property
    def row1_positions(self) -> tuple[int, ...]:
        b, r1 = self.b, self.a + self.b
        if self.layout == "row":
            return tuple(range(r1))
        return tuple(2 * j for j in range(b)) + tuple(range(2 * b, self.n))

    @property
    def row2_positions(self) -> tuple[int, ...]:
        if self.layout == "row":
            return tuple(range(self.a + self.b, self.n))
        return tuple(2 * j + 1 for j in range(self.b))

    def columns(self) -> tuple[tuple[int, ...], ...]:
        """Factor positions of each column, left to right."""
        r1, r2 = self.row1_positions, self.row2_positions
        return tuple(
            (r1[j], r2[j]) if j < self.b else (r1[j],) for j in range(self.a + self.b)
        )

    @classmethod
    def from_partition(cls, first: int, second: int, layout: str = "column") -> TwoRowShape:
        if second > first:
            raise ValueError("first row must be at least as long as the second")
        return cls(first - second, second, layout)


def _as_v(vec) -> tuple:
    if isinstance(vec, Octonion):
        if vec.coords[0]:
            raise ValueError("tableau entries must lie in Im(O)")
        return vec.coords[1:]
    vec = tuple(as_scalar(c) for c in vec)
    if len(vec) != DIM_V:
        raise ValueError(f"entries of V have {DIM_V} coordinates, got {len(vec)}")
    return vec


@dataclass(frozen=True)
class TableauFilling:
    row1: tuple
    row2: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "row1", tuple(_as_v(v) for v in self.row1))
        object.__setattr__(self, "row2", tuple(_as_v(v) for v in self.row2))
        if len(self.row2) > len(self.row1):
            raise ValueError("second row longer than the first")

    def shape(self, layout: str = "column") -> TwoRowShape:
        return TwoRowShape(len(self.row1) - len(self.row2), len(self.row2), layout)

    def swapped(self, p: tuple[int, int], q: tuple[int, int]) -> TableauFilling:
        """Exchange the entries at (row, column) positions p and q (0-based)."""
        rows = [list(self.row1), list(self.row2)]
        rows[p[0]][p[1]], rows[q[0]][q[1]] = rows[q[0]][q[1]], rows[p[0]][p[1]]
        return TableauFilling(tuple(rows[0]), tuple(rows[1]))


class TensorVector:
    """Sparse element of the n-th tensor power of V, keyed by index tuples."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms: Mapping[tuple, object] | None = None):
        self.degree = degree
        out = {}
        for key, c in (terms or {}).items():
            key = tuple(key)
            if len(key) != degree or any(not 0 <= k < DIM_V for k in key):
                raise ValueError(f"bad tensor index {key} for degree {degree}")
            c = as_scalar(c)
            if c:
                out[key] = c
        self.terms = out

    @classmethod
    def _raw(cls, degree: int, terms: dict) -> TensorVector:
        t = object.__new__(cls)
        t.degree = degree
        t.terms = terms
        return t

    @classmethod
    def pure(cls, factors: Sequence[Sequence]) -> TensorVector:
        factors = [_as_v(f) for f in factors]
        terms: dict = {(): ONE}
        for f in factors:
            nxt = {}
            for key, c in terms.items():
                for k, x in enumerate(f):
                    if x:
                        nxt[key + (k,)] = c * x
            terms = nxt
        return cls._raw(len(factors), terms)

    def _check(self, other: TensorVector) -> None:
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")

    def __add__(self, other: TensorVector) -> TensorVector:
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, ZERO) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return TensorVector._raw(self.degree, out)

    def __neg__(self) -> TensorVector:
        return TensorVector._raw(self.degree, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: TensorVector) -> TensorVector:
        return self + (-other)

    def __rmul__(self, c) -> TensorVector:
        c = as_scalar(c)
        if not c:
            return TensorVector._raw(self.degree, {})
        return TensorVector._raw(self.degree, {k: c * x for k, x in self.terms.items()})

    __mul__ = __rmul__

    def permuted(self, sigma: Sequence[int]) -> TensorVector:
        """Move the factor in position p to position sigma[p]."""
        out = {}
        n = self.degree
        for key, c in self.terms.items():
            new = [0] * n
            for p, k in enumerate(key):
                new[sigma[p]] = k
            out[tuple(new)] = c
        return TensorVector._raw(n, out)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TensorVector)
            and self.degree == other.degree
            and self.terms == other.terms
        )

    def __repr__(self) -> str:
        return f"TensorVector(degree={self.degree}, nnz={len(self.terms)})"

    # flat integer coordinates, lexicographic in the index tuple
    def to_sparse(self) -> dict:
        out = {}
        for key, c in self.terms.items():
            code = 0
            for k in key:
                code = code * DIM_V + k
            out[code] = c
        return out

    @classmethod
    def from_sparse(cls, degree: int, v: Mapping[int, object]) -> TensorVector:
        terms = {}
        for code, c in v.items():
            key = []
            for _ in range(degree):
                code, k = divmod(code, DIM_V)
                key.append(k)
            terms[tuple(reversed(key))] = c
        return cls._raw(degree, terms)


# ---------------------------------------------------------------------------
# tableaux and the Young projector


def tensor_embed(f: TableauFilling, shape: TwoRowShape | None = None) -> TensorVector:
    layout = "column" if shape is None else shape.layout
    fs = f.shape(layout)
    if shape is not None and (shape.a, shape.b) != (fs.a, fs.b):
        raise ValueError(f"filling has shape {fs.partition}, expected {shape.partition}")
    factors: list = [None] * fs.n
    for p, v in zip(fs.row1_positions, f.row1):
        factors[p] = v
    for p, v in zip(fs.row2_positions, f.row2):
        factors[p] = v
    return TensorVector.pure(factors)


def _perm_sign(perm: Sequence[int]) -> int:
    sign, seen = 1, set()
    for start in range(len(perm)):
        if start in seen:
            continue
        length, j = 0, start
        while j not in seen:
            seen.add(j)
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _subgroup(n: int, blocks: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """All permutations of range(n) preserving each block setwise."""
    out = []
    for images in product(*(permutations(bl) for bl in blocks)):
        sigma = list(range(n))
        for bl, im in zip(blocks, images):
            for src, dst in zip(bl, im):
                sigma[src] = dst
        out.append(tuple(sigma))
    return out


def hook_length_count(shape: TwoRowShape) -> int:
    """Number of standard Young tableaux of shape (a+b, b)."""
    r1, r2 = shape.partition
    hooks = [r1 - j + (1 if j < r2 else 0) for j in range(r1)]
    hooks += [r2 - j for j in range(r2)]
    return factorial(shape.n) // prod(hooks)


@lru_cache(maxsize=None)
def _projector_terms(shape: TwoRowShape) -> tuple[tuple[tuple[int, ...], Fraction], ...]:
    """The projector as a list of (permutation, coefficient) pairs.

    Columns are antisymmetrized first and rows symmetrized second, i.e. the
    operator is (sum over row group) * (signed sum over column group), scaled
    by f_lambda / n! so that it is idempotent.
    """
    n = shape.n
    rows = _subgroup(n, [shape.row1_positions, shape.row2_positions])
    cols = _subgroup(n, [c for c in shape.columns() if len(c) == 2])
    scale = Fraction(hook_length_count(shape), factorial(n))
    acc: dict[tuple[int, ...], Fraction] = {}
    for r in rows:
        for c in cols:
            rc = tuple(r[c[p]] for p in range(n))
            acc[rc] = acc.get(rc, Fraction(0)) + _perm_sign(c) * scale
    return tuple((p, q) for p, q in sorted(acc.items()) if q)


def young_project(t: TensorVector, shape: TwoRowShape) -> TensorVector:
    if t.degree != shape.n:
        raise ValueError(f"tensor degree {t.degree} does not match shape {shape.partition}")
    out: dict = {}
    n = shape.n
    for sigma, q in _projector_terms(shape):
        coeff = GaussianRational(q)
        for key, c in t.terms.items():
            new = [0] * n
            for p, k in enumerate(key):
                new[sigma[p]] = k
            new = tuple(new)
            s = out.get(new, ZERO) + coeff * c
            if s:
                out[new] = s
            else:
                out.pop(new, None)
    return TensorVector._raw(n, out)


def exchange_check(f: TableauFilling, layout: str = "column") -> bool:
    """Verify the three exchange conditions for the projected filling."""
    shape = f.shape(layout)
    proj = lambda g: young_project(tensor_embed(g, shape), shape)  # noqa: E731
    w = proj(f)
    cols = shape.a + shape.b
    for j in range(shape.b):
        if proj(f.swapped((0, j), (1, j))) != -w:
            return False
    for j in range(cols):
        for k in range(j + 1, cols):
            if (j < shape.b) != (k < shape.b):
                continue
            g = f.swapped((0, j), (0, k))
            if j < shape.b:
                g = g.swapped((1, j), (1, k))
            if proj(g) != w:
                return False
    for j in range(shape.b):
        for k in range(j + 1, cols):
            z1 = proj(f.swapped((0, k), (0, j)))
            z2 = proj(f.swapped((0, k), (1, j)))
            if z1 + z2 != w:
                return False
    return True


@lru_cache(maxsize=None)
def schur_image(shape: TwoRowShape) -> Subspace:
    """Image of the Young projector, spanned by projections of basis tensors."""
    n = shape.n
    vecs = []
    for key in product(range(DIM_V), repeat=n):
        vecs.append(young_project(TensorVector._raw(n, {key: ONE}), shape).to_sparse())
    return span(vecs, DIM_V**n)


# ---------------------------------------------------------------------------
# the g-action


def v_operator(x: GElement | Operator, basis: str = "standard") -> Operator:
    """The 7x7 matrix of x on V in the chosen basis."""
    op = x.op if isinstance(x, GElement) else x
    if op.dim == 8:
        op = restrict_to_V(op)
    if basis == "weight":
        return in_weight_basis(op)
    if basis != "standard":
        raise ValueError(f"unknown basis {basis!r}")
    return op


def _columns(op: Operator) -> list[list[tuple[int, GaussianRational]]]:
    return [[(r, op.rows[r][c]) for r in range(op.dim) if op.rows[r][c]] for c in range(op.dim)]


def diagonal_action(x: GElement | Operator, t: TensorVector, basis: str = "standard") -> TensorVector:
    """sum_p (1 x ... x X x ... x 1) t, with X acting in factor p."""
    cols = _columns(v_operator(x, basis))
    out: dict = {}
    for key, c in t.terms.items():
        for p, k in enumerate(key):
            for r, a in cols[k]:
                new = key[:p] + (r,) + key[p + 1 :]
                s = out.get(new, ZERO) + a * c
                if s:
                    out[new] = s
                else:
                    out.pop(new, None)
    return TensorVector._raw(t.degree, out)


class _FlatAction:
    """Diagonal action on integer-coded tensors, for :func:`closure_under`."""

    def __init__(self, op: Operator, degree: int):
        self.cols = _columns(op)
        self.powers = [DIM_V ** (degree - 1 - p) for p in range(degree)]

    def __call__(self, v: Mapping[int, GaussianRational]) -> dict:
        out: dict = {}
        cols, powers = self.cols, self.powers
        for code, c in v.items():
            for pw in powers:
                d = (code // pw) % DIM_V
                for r, a in cols[d]:
                    new = code + (r - d) * pw
                    s = out.get(new)
                    s = a * c if s is None else s + a * c
                    if s:
                        out[new] = s
                    else:
                        del out[new]
        return out


def highest_weight_vector(a: int, b: int, basis: str = "standard") -> TensorVector:
    """w_lambda: top row v_(-beta''), bottom row v_(beta'), Young-projected."""
    top_label, bottom_label = -BETA.prime(2), BETA.prime(1)
    if basis == "weight":
        def unit(label):
            return tuple(ONE if w == label else ZERO for w in WEIGHT_LABELS)
        top, bottom = unit(top_label), unit(bottom_label)
    elif basis == "standard":
        top, bottom = weight_vector(top_label), weight_vector(bottom_label)
    else:
        raise ValueError(f"unknown basis {basis!r}")
    f = TableauFilling((top,) * (a + b), (bottom,) * b)
    shape = TwoRowShape(a, b)
    return young_project(tensor_embed(f, shape), shape)


def _tensor_weight(code: int, degree: int) -> RootVector:
    m = n = 0
    for _ in range(degree):
        code, k = divmod(code, DIM_V)
        x, y = weight_coordinates(WEIGHT_LABELS[k])
        m += x
        n += y
    return (m, n)


@dataclass
class IrrepResult:
    a: int
    b: int
    degree: int
    subspace: Subspace  # in weight-basis tensor coordinates
    weights: dict = field(default_factory=dict)
    highest_weight_ok: bool = False
    in_schur_image: bool = False

    @property
    def dimension(self) -> int:
        return self.subspace.dim

    @property
    def weyl_dimension(self) -> int:
        return weyl_dimension(self.a, self.b)

    def basis_tensors(self) -> list[TensorVector]:
        return [TensorVector.from_sparse(self.degree, v) for v in self.subspace.basis]


def chevalley_v_operators(basis: str = "weight") -> list[Operator]:
    return [v_operator(x, basis) for x in chevalley_basis().elements()]


def generate_irrep(a: int, b: int, max_degree: int = 4) -> IrrepResult:
    """Gamma_{a,b} = U(g) w_lambda inside the tensor power of degree a + 2b."""
    if a < 0 or b < 0:
        raise ValueError("a and b must be non-negative")
    n = a + 2 * b
    if n > max_degree:
        raise DegreeBoundExceeded(
            f"Gamma_{{{a},{b}}} needs tensor degree {n} > max_degree={max_degree}"
        )
    shape = TwoRowShape(a, b)
    w = highest_weight_vector(a, b, basis="weight")
    ops = [_FlatAction(op, n) for op in chevalley_v_operators("weight")]
    sub = closure_under(ops, [w.to_sparse()], DIM_V**n)

    weights: dict[RootVector, int] = {}
    for row in sub.basis:
        wt = _tensor_weight(min(row), n)
        weights[wt] = weights.get(wt, 0) + 1

    lam = (a, b)
    hw_ok = all(_tensor_weight(k, n) == lam for k in w.to_sparse())
    for rho in POSITIVE_ROOTS:
        e_op = _FlatAction(v_operator(E_vector(rho), "weight"), n)
        hw_ok = hw_ok and not e_op(w.to_sparse())
    hw_ok = hw_ok and all(is_dominated_by(mu, lam) for mu in weights)

    in_image = all(
        young_project(t, shape) == t
        for t in (TensorVector.from_sparse(n, v) for v in sub.basis)
    )
    return IrrepResult(a, b, n, sub, weights, hw_ok, in_image)


def weyl_dimension(a: int, b: int) -> int:
    if a < 0 or b < 0:
        raise ValueError("a and b must be non-negative")
    num = (a + 1) * (b + 1) * (a + b + 2) * (a + 2 * b + 3) * (a + 3 * b + 4) * (2 * a + 3 * b + 5)
    q, r = divmod(num, 120)
    assert r == 0
    return q


def schur_dimension(shape: TwoRowShape, N: int = DIM_V) -> int:
    """Hook content formula for dim S_lambda(C^N)."""
    r1, r2 = shape.partition
    num = den = 1
    for row, length in enumerate((r1, r2)):
        for col in range(length):
            num *= N + col - row
            arm = length - col - 1
            leg = 1 if (row == 0 and col < r2) else 0
            den *= arm + leg + 1
    q, r = divmod(num, den)
    assert r == 0
    return q


def wedge2_split() -> tuple[Subspace, Subspace]:
    """Gamma_{0,1} and a complementary copy of V inside wedge^2 V (weight basis).

    The complementary seed is the vector of weight mu_1 = (1, 0) in the
    antisymmetric tensors that every positive root vector kills.
    """
    from .linalg import kernel

    shape = TwoRowShape(0, 1)
    adjoint = generate_irrep(0, 1).subspace
    lam = (1, 0)
    image = schur_image(shape)
    candidates = [v for v in image.basis if _tensor_weight(min(v), 2) == lam]
    positive = [_FlatAction(v_operator(E_vector(r), "weight"), 2) for r in POSITIVE_ROOTS]
    # solve for combinations of the candidates killed by every positive E
    images = [[op(v) for op in positive] for v in candidates]
    keys = sorted({(j, k) for row in images for j, img in enumerate(row) for k in img})
    matrix = [[row[j].get(k, ZERO) for row in images] for j, k in keys]
    null = kernel(matrix) if matrix else span(
        [{i: ONE} for i in range(len(candidates))], len(candidates)
    )
    if null.dim != 1:
        raise AssertionError(f"expected one highest weight vector of weight {lam}, got {null.dim}")
    seed: dict = {}
    for i, c in null.basis[0].items():
        for k, x in candidates[i].items():
            seed[k] = seed.get(k, ZERO) + c * x
    seed = {k: c for k, c in seed.items() if c}
    ops = [_FlatAction(op, 2) for op in chevalley_v_operators("weight")]
    copy_of_v = closure_under(ops, [seed], DIM_V**2)
    return adjoint, copy_of_v
