from itertools import product

import pytest
from hypothesis import given, strategies as st

from octog2 import gf8
from octog2.gf8 import ALPHA, ELEMENTS, NONZERO, ONE, ZERO

elements = st.sampled_from(ELEMENTS)
nonzero = st.sampled_from(NONZERO)


def _clmul_mod(x: int, y: int) -> int:
    # independent oracle: schoolbook polynomial product, reduced by a^3 + a + 1
    acc = 0
    for k in range(3):
        if (y >> k) & 1:
            acc ^= x << k
    for deg in (4, 3):
        if (acc >> deg) & 1:
            acc ^= 0b1011 << (deg - 3)
    return acc


def a(k):
    return gf8.alpha_power(k)


def test_addition_examples():
    assert ZERO + ALPHA == ALPHA
    assert ALPHA + ALPHA == ZERO
    assert ALPHA + ONE == a(3)


def test_multiplication_examples():
    assert ALPHA * a(2) == a(3) == ONE + ALPHA
    assert a(3) * a(4) == ONE
    assert all(ZERO * x == ZERO for x in ELEMENTS)


def test_power_examples():
    assert gf8.power(ALPHA, 7) == ONE
    assert all(gf8.power(x, 0) == ONE for x in ELEMENTS)
    assert gf8.power(ALPHA, 3) == ALPHA + ONE
    with pytest.raises(ZeroDivisionError):
        gf8.power(ZERO, -1)


def test_log_table_is_frozen():
    assert [a(k).bits for k in range(7)] == [0b001, 0b010, 0b100, 0b011, 0b110, 0b111, 0b101]


def test_product_table_against_polynomial_oracle():
    for x, y in product(range(8), repeat=2):
        assert (gf8.F8Element(x) * gf8.F8Element(y)).bits == _clmul_mod(x, y)


def test_trace_examples_and_kernel():
    assert gf8.trace(ZERO) == 0
    assert gf8.trace(ONE) == 1
    assert gf8.trace(ALPHA) == 0
    assert {x for x in ELEMENTS if gf8.trace(x) == 0} == {ZERO, a(1), a(2), a(4)}


def test_phi_examples():
    assert all(gf8.phi(ZERO, y) == 0 for y in ELEMENTS)
    assert all(gf8.phi(x, x) == 1 for x in NONZERO)
    assert gf8.phi(ALPHA, a(3)) == 0


def test_frobenius_and_twist():
    assert gf8.frobenius(ALPHA) == a(2)
    assert all(gf8.frobenius(gf8.frobenius(gf8.frobenius(x))) == x for x in ELEMENTS)
    assert gf8.mtwist(a(6)) == ONE
    assert gf8.mtwist(ZERO) == ZERO


def test_alpha_index():
    assert gf8.alpha_index(ONE) == 0
    assert gf8.alpha_index(ALPHA + ONE) == 3
    assert gf8.alpha_index(a(2) + ALPHA) == 4
    with pytest.raises(ValueError):
        gf8.alpha_index(ZERO)


def test_rendering():
    assert [str(x) for x in (ZERO, ONE, ALPHA, a(2), a(6))] == ["0", "1", "a", "a^2", "a^6"]


@given(elements, elements, elements)
def test_field_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x and x + y == y + x


@given(nonzero)
def test_inverse(x):
    assert x * gf8.inverse(x) == ONE


@given(elements, elements)
def test_phi_invariance(x, y):
    for tau in (gf8.frobenius, gf8.mtwist):
        assert gf8.phi(tau(x), tau(y)) == gf8.phi(x, y)


@given(elements, elements)
def test_frobenius_is_additive_and_multiplicative(x, y):
    f = gf8.frobenius
    assert f(x + y) == f(x) + f(y)
    assert f(x * y) == f(x) * f(y)
