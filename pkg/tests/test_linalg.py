import pytest
from hypothesis import given, settings, strategies as st

from octog2 import linalg as la
from octog2.linalg import Operator
from octog2.scalar import I, ONE, ZERO, GaussianRational

entries = st.builds(GaussianRational, st.integers(-3, 3), st.integers(-1, 1))


def matrices(max_rows=5, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(entries, min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


def shift7():
    return Operator([[ONE if r == (c + 1) % 7 else ZERO for c in range(7)] for r in range(7)])


def test_operator_examples():
    x = Operator([[1, 2], [3, I]])
    ident = Operator.identity(8)
    assert Operator.identity(2).commutator(x).is_zero()
    assert ident.trace() == 8
    y = Operator([[0, 1], [1, 0]])
    assert x.commutator(y) == -y.commutator(x)
    assert (x @ y)((1, 0)) == (2, I)
    assert x.conjugate().rows[1][1] == -I


def test_kernel_examples():
    assert la.kernel(Operator.zero(4)).dim == 4
    assert la.kernel(Operator.identity(4)).dim == 0


def test_eigenspace_examples():
    assert la.simultaneous_eigenspace([Operator.identity(3)], [1]).dim == 3
    assert la.simultaneous_eigenspace([Operator.diagonal([1, 2])], [3]).dim == 0
    with pytest.raises(ValueError):
        la.simultaneous_eigenspace([Operator([[0, 1], [0, 0]]), Operator([[0, 0], [1, 0]])], [0, 0])


def test_closure_examples():
    v = {2: ONE, 4: I}
    assert la.closure_under([], [v], 7) == la.span([v], 7)
    assert la.closure_under([shift7()], [{0: ONE}], 7).dim == 7


def test_membership_examples():
    full = la.span([{k: ONE} for k in range(3)], 3)
    assert la.member(full, (1, 2, 3))
    assert not la.member(la.Subspace(3), (1, 0, 0))
    assert la.member(la.span([(1, I)], 2), (I, -1))


def test_solve_and_inverse():
    m = Operator([[2, 1], [1, I]])
    x = la.solve(m, (3, 1 + I))
    assert m(x) == (3, 1 + I)
    assert la.inverse(m) @ m == Operator.identity(2)
    with pytest.raises(ZeroDivisionError):
        la.inverse(Operator([[1, 2], [2, 4]]))


def test_coordinates_reconstruct():
    s = la.span([(1, 0, 1), (0, 1, I)], 3)
    v = {0: 2 * ONE, 1: 3 * ONE, 2: 2 + 3 * I}
    c = s.coordinates(v)
    rebuilt = la.add_vectors(la.scale_vector(c[0], s.basis[0]), la.scale_vector(c[1], s.basis[1]))
    assert rebuilt == v
    with pytest.raises(ValueError):
        s.coordinates({0: ONE})


@given(matrices())
def test_rank_nullity(m):
    ker = la.kernel(m)
    assert la.rank(m) + ker.dim == len(m[0])
    for v in ker.dense_basis():
        assert all(sum((a * x for a, x in zip(row, v)), ZERO) == 0 for row in m)


@settings(max_examples=50)
@given(matrices(4, 5), st.lists(st.lists(entries, min_size=4, max_size=4), min_size=4, max_size=4))
def test_rref_is_canonical(vectors, mix):
    cols = len(vectors[0])
    mixed = [
        [sum((mix[i][k] * vectors[k][j] for k in range(len(vectors))), ZERO) for j in range(cols)]
        for i in range(4)
    ]
    s, t = la.span(vectors, cols), la.span(mixed, cols)
    assert t.is_subspace_of(s)
    if t.dim == s.dim:
        assert [dict(b) for b in s.basis] == [dict(b) for b in t.basis]


@given(st.lists(st.integers(0, 6), min_size=1, max_size=3), st.integers(0, 6))
def test_closure_monotone_and_idempotent(seed_idx, extra):
    proj = Operator.diagonal([1, 1, 0, 0, 1, 0, 0])
    ops = [proj, Operator([[ONE if (r, c) == (1, 3) else ZERO for c in range(7)] for r in range(7)])]
    s1 = la.closure_under(ops, [{k: ONE} for k in seed_idx], 7)
    s2 = la.closure_under(ops, [{k: ONE} for k in seed_idx + [extra]], 7)
    assert s1.is_subspace_of(s2)
    assert la.closure_under(ops, s2.basis, 7) == s2
