"""Exact linear algebra over Q(i).

Vectors are sparse ``dict[int, scalar]`` maps from coordinate index to a
nonzero coefficient.  Square matrices are :class:`Operator`; subspaces are
kept in reduced row-echelon form (:class:`Subspace`), which makes their
bases canonical and equality of subspaces a plain comparison.
"""

from __future__ import annotations

from collections import deque
from typing import Callable, Iterable, Mapping, Sequence

from .scalar import ONE, ZERO, GaussianRational, as_scalar

__all__ = [
    "Operator",
    "Subspace",
    "sparse",
    "dense",
    "add_vectors",
    "scale_vector",
    "span",
    "kernel",
    "rank",
    "simultaneous_eigenspace",
    "closure_under",
    "member",
    "equal_subspace",
    "solve",
    "inverse",
]

Vector = dict


def sparse(seq: Iterable) -> dict:
    """Dense coordinate sequence -> sparse vector."""
    out = {}
    for k, c in enumerate(seq):
        if c:
            out[k] = as_scalar(c)
    return out


def dense(v: Mapping, dim: int) -> tuple:
    out = [ZERO] * dim
    for k, c in v.items():
        if not 0 <= k < dim:
            raise IndexError(f"coordinate {k} outside dimension {dim}")
        out[k] = c
    return tuple(out)


def add_vectors(u: Mapping, v: Mapping) -> dict:
    out = dict(u)
    for k, c in v.items():
        s = out.get(k)
        s = c if s is None else s + c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def scale_vector(c, v: Mapping) -> dict:
    if not c:
        return {}
    return {k: c * x for k, x in v.items()}


def _axpy(v: dict, c, row: Mapping) -> None:
    """v -= c * row, in place, dropping cancelled entries."""
    for k, x in row.items():
        s = v.get(k)
        if s is None:
            v[k] = -(c * x)
        else:
            s = s - c * x
            if s:
                v[k] = s
            else:
                del v[k]


def _height(c: GaussianRational) -> int:
    c = as_scalar(c)
    return sum(
        q.numerator.bit_length() + q.denominator.bit_length() for q in (c.re, c.im)
    )


# ---------------------------------------------------------------------------
# operators


class Operator:
    """A square matrix with exact entries, acting on column vectors."""

    __slots__ = ("dim", "rows")

    def __init__(self, rows: Sequence[Sequence]):
        rows = tuple(tuple(as_scalar(c) for c in r) for r in rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("operator matrix must be square and nonempty")
        self.dim = n
        self.rows = rows

    @classmethod
    def _raw(cls, rows: tuple) -> Operator:
        op = object.__new__(cls)
        op.dim = len(rows)
        op.rows = rows
        return op

    @classmethod
    def zero(cls, dim: int) -> Operator:
        return cls._raw(tuple((ZERO,) * dim for _ in range(dim)))

    @classmethod
    def identity(cls, dim: int) -> Operator:
        return cls.diagonal([ONE] * dim)

    @classmethod
    def diagonal(cls, values: Sequence) -> Operator:
        n = len(values)
        return cls(
            [[values[r] if r == c else ZERO for c in range(n)] for r in range(n)]
        )

    @classmethod
    def from_columns(cls, columns: Sequence[Mapping]) -> Operator:
        """Build from sparse column images (column k is the image of basis k)."""
        n = len(columns)
        rows = [[ZERO] * n for _ in range(n)]
        for c, col in enumerate(columns):
            for r, x in col.items():
                rows[r][c] = x
        return cls._raw(tuple(tuple(r) for r in rows))

    def column(self, k: int) -> dict:
        return {r: row[k] for r, row in enumerate(self.rows) if row[k]}

    def __call__(self, v):
        """Apply to a sparse dict (returns dict) or a dense sequence (returns tuple)."""
        if isinstance(v, Mapping):
            out = {}
            for c, x in v.items():
                for r, row in enumerate(self.rows):
                    a = row[c]
                    if a:
                        s = out.get(r)
                        s = a * x if s is None else s + a * x
                        if s:
                            out[r] = s
                        else:
                            del out[r]
            return out
        if len(v) != self.dim:
            raise ValueError(f"dimension mismatch: operator {self.dim}, vector {len(v)}")
        return tuple(
            sum((a * x for a, x in zip(row, v) if a and x), ZERO) for row in self.rows
        )

    apply = __call__

    def _check(self, other: Operator) -> None:
        if not isinstance(other, Operator):
            raise TypeError(f"expected Operator, got {type(other).__name__}")
        if other.dim != self.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __matmul__(self, other: Operator) -> Operator:
        self._check(other)
        cols = list(zip(*other.rows))
        return Operator._raw(
            tuple(
                tuple(
                    sum((a * b for a, b in zip(row, col) if a and b), ZERO)
                    for col in cols
                )
                for row in self.rows
            )
        )

    compose = __matmul__

    def __add__(self, other: Operator) -> Operator:
        self._check(other)
        return Operator._raw(
            tuple(
                tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)
            )
        )

    def __sub__(self, other: Operator) -> Operator:
        self._check(other)
        return Operator._raw(
            tuple(
                tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)
            )
        )

    def __neg__(self) -> Operator:
        return Operator._raw(tuple(tuple(-a for a in r) for r in self.rows))

    def __mul__(self, c) -> Operator:
        if isinstance(c, Operator):
            return NotImplemented
        c = as_scalar(c)
        return Operator._raw(tuple(tuple(c * a for a in r) for r in self.rows))

    __rmul__ = __mul__

    def __truediv__(self, c) -> Operator:
        return self * (ONE / as_scalar(c))

    def commutator(self, other: Operator) -> Operator:
        return self @ other - other @ self

    def trace(self) -> GaussianRational:
        return sum((self.rows[k][k] for k in range(self.dim)), ZERO)

    def conjugate(self) -> Operator:
        """Entrywise complex conjugate."""
        return Operator._raw(tuple(tuple(a.conjugate() for a in r) for r in self.rows))

    def transpose(self) -> Operator:
        return Operator._raw(tuple(zip(*self.rows)))

    def flatten(self) -> tuple:
        return tuple(a for r in self.rows for a in r)

    def is_zero(self) -> bool:
        return not any(a for r in self.rows for a in r)

    def is_integral(self) -> bool:
        return all(a.is_integral() for r in self.rows for a in r)

    def submatrix(self, indices: Sequence[int]) -> Operator:
        return Operator._raw(tuple(tuple(self.rows[r][c] for c in indices) for r in indices))

    def __eq__(self, other) -> bool:
        return isinstance(other, Operator) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(a) for a in r) for r in self.rows)
        return f"Operator([{body}])"


def commutator(a: Operator, b: Operator) -> Operator:
    return a.commutator(b)


# ---------------------------------------------------------------------------
# row echelon machinery


class _Echelon:
    """Incrementally maintained echelon basis.

    Each stored row is monic at its leading (smallest) coordinate.  Rows are
    not back-reduced while inserting; :meth:`rref` finishes the job.
    """

    def __init__(self, dim: int):
        self.dim = dim
        self.rows: dict[int, dict] = {}

    def reduce(self, v: Mapping) -> dict:
        v = dict(v)
        rows = self.rows
        while True:
            hits = [k for k in v if k in rows]
            if not hits:
                return v
            p = min(hits)
            _axpy(v, v[p], rows[p])

    def add(self, v: Mapping) -> dict | None:
        """Insert v; return the new echelon row, or None if v was dependent."""
        r = self.reduce(v)
        if not r:
            return None
        p = min(r)
        lead = r[p]
        if lead != ONE:
            inv = ONE / lead
            r = {k: inv * x for k, x in r.items()}
        self.rows[p] = r
        return r

    def rref(self) -> tuple[dict, ...]:
        pivots = sorted(self.rows)
        done: dict[int, dict] = {}
        for p in reversed(pivots):
            row = dict(self.rows[p])
            while True:
                hits = [k for k in row if k != p and k in done]
                if not hits:
                    break
                k = min(hits)
                _axpy(row, row[k], done[k])
            done[p] = row
        return tuple(done[p] for p in pivots)


class Subspace:
    """A subspace of an ``ambient_dim``-dimensional coordinate space.

    ``basis`` is the reduced row-echelon basis: strictly increasing pivots,
    each pivot entry 1 and absent from every other basis row.
    """

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim: int, basis: Sequence[Mapping] = ()):
        self.ambient_dim = ambient_dim
        self.basis = tuple(dict(b) for b in basis)
        self.pivots = tuple(min(b) for b in self.basis)
        if list(self.pivots) != sorted(set(self.pivots)):
            raise ValueError("basis is not in reduced row-echelon form")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return len(self.basis)

    def reduce(self, v: Mapping) -> dict:
        """Remainder of v after eliminating every pivot coordinate."""
        v = dict(v)
        for p, row in zip(self.pivots, self.basis):
            c = v.get(p)
            if c:
                _axpy(v, c, row)
        return v

    def contains(self, v: Mapping) -> bool:
        if any(not 0 <= k < self.ambient_dim for k in v):
            raise ValueError("vector lies outside the ambient dimension")
        return not self.reduce(v)

    __contains__ = contains

    def coordinates(self, v: Mapping) -> tuple:
        """Coefficients of v in ``basis``; raises if v is not in the subspace."""
        if not self.contains(v):
            raise ValueError("vector is not in the subspace")
        return tuple(v.get(p, ZERO) for p in self.pivots)

    def is_subspace_of(self, other: Subspace) -> bool:
        _same_ambient(self, other)
        return all(other.contains(b) for b in self.basis)

    def dense_basis(self) -> list[tuple]:
        return [dense(b, self.ambient_dim) for b in self.basis]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient_dim={self.ambient_dim})"


def _same_ambient(s: Subspace, t: Subspace) -> None:
    if s.ambient_dim != t.ambient_dim:
        raise ValueError(f"ambient dimension mismatch: {s.ambient_dim} vs {t.ambient_dim}")


def span(vectors: Iterable, dim: int) -> Subspace:
    """RREF basis of the span of sparse (dict) or dense (sequence) vectors."""
    ech = _Echelon(dim)
    for v in vectors:
        if not isinstance(v, Mapping):
            if len(v) != dim:
                raise ValueError(f"vector of length {len(v)} in dimension {dim}")
            v = sparse(v)
        ech.add(v)
    return Subspace(dim, ech.rref())


def _matrix_rows(m) -> tuple[list[dict], int]:
    if isinstance(m, Operator):
        return [sparse(r) for r in m.rows], m.dim
    rows = [list(r) for r in m]
    if not rows:
        raise ValueError("empty matrix; pass an Operator or nonempty row list")
    ncols = len(rows[0])
    if any(len(r) != ncols for r in rows):
        raise ValueError("ragged matrix")
    return [sparse(r) for r in rows], ncols


def _gauss_jordan(rows: list[dict], ncols: int) -> tuple[dict, ...]:
    """RREF of a row list; pivot row chosen by smallest coefficient height."""
    rows = [r for r in rows if r]
    done: list[dict] = []
    for col in range(ncols):
        cands = [k for k, r in enumerate(rows) if col in r]
        if not cands:
            continue
        k = min(cands, key=lambda j: (_height(rows[j][col]), len(rows[j]), j))
        piv = rows.pop(k)
        inv = ONE / piv[col]
        piv = {c: inv * x for c, x in piv.items()}
        for r in rows:
            c = r.get(col)
            if c:
                _axpy(r, c, piv)
        for r in done:
            c = r.get(col)
            if c:
                _axpy(r, c, piv)
        rows = [r for r in rows if r]
        done.append(piv)
    return tuple(done)


def rank(m) -> int:
    rows, ncols = _matrix_rows(m)
    return len(_gauss_jordan(rows, ncols))


def kernel(m) -> Subspace:
    """Null space of a matrix (Operator, or a list of equal-length rows)."""
    rows, ncols = _matrix_rows(m)
    red = _gauss_jordan(rows, ncols)
    pivots = {min(r): r for r in red}
    vectors = []
    for f in range(ncols):
        if f in pivots:
            continue
        v = {f: ONE}
        for p, r in pivots.items():
            c = r.get(f)
            if c:
                v[p] = -c
        vectors.append(v)
    return span(vectors, ncols)


def solve(m, b: Sequence):
    """One exact solution x of m x = b (dense), or None if inconsistent."""
    rows, ncols = _matrix_rows(m)
    b = [as_scalar(x) for x in b]
    if len(b) != len(rows):
        raise ValueError("right-hand side length mismatch")
    aug = []
    for r, rhs in zip(rows, b):
        r = dict(r)
        if rhs:
            r[ncols] = rhs
        aug.append(r)
    red = _gauss_jordan(aug, ncols + 1)
    x = [ZERO] * ncols
    for r in red:
        p = min(r)
        if p == ncols:
            return None
        x[p] = r.get(ncols, ZERO)
    return tuple(x)


def inverse(op: Operator) -> Operator:
    n = op.dim
    cols = []
    for k in range(n):
        e = [ZERO] * n
        e[k] = ONE
        x = solve(op, e)
        if x is None:
            raise ZeroDivisionError("operator is singular")
        cols.append(sparse(x))
    return Operator.from_columns(cols)


def member(s: Subspace, v) -> bool:
    if not isinstance(v, Mapping):
        if len(v) != s.ambient_dim:
            raise ValueError("dimension mismatch")
        v = sparse(v)
    return s.contains(v)


def equal_subspace(s: Subspace, t: Subspace) -> bool:
    _same_ambient(s, t)
    return s.is_subspace_of(t) and t.is_subspace_of(s)


def simultaneous_eigenspace(ops: Sequence[Operator], eigenvalues: Sequence) -> Subspace:
    """Intersection of the kernels of op_k - lambda_k for commuting ops."""
    if len(ops) != len(eigenvalues):
        raise ValueError("one eigenvalue per operator is required")
    if not ops:
        raise ValueError("need at least one operator")
    n = ops[0].dim
    for a in ops:
        if a.dim != n:
            raise ValueError("operators act on different dimensions")
    for j, a in enumerate(ops):
        for b in ops[j + 1 :]:
            if not a.commutator(b).is_zero():
                raise ValueError("operators do not commute")
    stacked = []
    for a, lam in zip(ops, eigenvalues):
        shifted = a - Operator.identity(n) * as_scalar(lam)
        stacked.extend(shifted.rows)
    return kernel(stacked)


def closure_under(
    ops: Sequence[Callable[[dict], dict]], seeds: Iterable[Mapping], dim: int
) -> Subspace:
    """Smallest subspace containing ``seeds`` and stable under every op.

    ``ops`` may be :class:`Operator` instances or any linear callables on
    sparse vectors.  New basis rows are processed first-in first-out, so the
    computation (and the RREF it returns) is deterministic.
    """
    ech = _Echelon(dim)
    queue: deque[dict] = deque()
    for s in seeds:
        if not isinstance(s, Mapping):
            s = sparse(s)
        row = ech.add(s)
        if row is not None:
            queue.append(row)
    while queue:
        v = queue.popleft()
        for op in ops:
            w = op(v)
            if not w:
                continue
            row = ech.add(w)
            if row is not None:
                queue.append(row)
    return Subspace(dim, ech.rref())
