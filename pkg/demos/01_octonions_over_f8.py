"""
Octonions from the field with eight elements
============================================

Basis units are indexed by F_8 and multiply by e^x e^y = (-1)^phi(x,y) e^(x+y).
"""

from fractions import Fraction

from octog2 import gf8, octonion as oc
from octog2.octonion import e, unit

# the field: a^3 = a + 1, so every nonzero element is a power of a
print("powers of a:", [str(gf8.alpha_power(k)) for k in range(7)])
print("trace zero set:", [str(x) for x in gf8.ELEMENTS if gf8.trace(x) == 0])

# u = e^0 is the identity; e_i = e^(a^i) are the imaginary units
one = unit(gf8.ZERO)
print("e1 e3 =", oc.multiply(e(1), e(3)))
print("e3 e1 =", oc.multiply(e(3), e(1)))
print("e1 e1 =", oc.multiply(e(1), e(1)))

# not associative, but alternative
print("[e1, e2, e3] =", oc.associator(e(1), e(2), e(3)))
print("[e1, e1, e3] =", oc.associator(e(1), e(1), e(3)))

a = one + Fraction(1, 2) * e(0) - 3 * e(5)
b = 2 * e(1) + e(6)
print("N(ab) == N(a) N(b):", oc.norm(oc.multiply(a, b)) == oc.norm(a) * oc.norm(b))

# Frobenius doubles indices and M shifts them; both are automorphisms
for tau in (oc.FR, oc.M):
    ok = all(
        oc.galois_apply(tau, oc.multiply(x, y)) == oc.multiply(oc.galois_apply(tau, x), oc.galois_apply(tau, y))
        for x in map(e, range(7))
        for y in map(e, range(7))
    )
    print(f"{tau} is an automorphism:", ok)
