"""
Derivations D(a ^ b) and the kernel of D
========================================

D(a, b) = 1/4 ([ad_a, ad_b] + ad_[a,b]) is a derivation for every pair.
Its image is g, of dimension 14, and the kernel is spanned by the shifts of
Delta = e1^e3 + e2^e6 + e4^e5.
"""

from octog2 import derivations as dv, linalg as la
from octog2.cli import wedge_text
from octog2.derivations import D_basis
from octog2.octonion import e

e13 = D_basis(1, 3)
print("e13 e1 =", e(1).transform(e13))
print("e13 e0 =", e(0).transform(e13))
print("e13 is a derivation:", dv.is_derivation(e13))

print("rank of D:", la.rank(dv.D_matrix()))
print("dim ker D:", dv.kernel_of_D().dim)
for k, w in enumerate(dv.delta_orbit()):
    print(f"  Delta shifted by {k}:", wedge_text(w))

# seven Cartan subalgebras, one per block B_k
for k, part in enumerate(dv.b_partition()):
    print(f"B_{k} =", sorted(part))
print("Cartan dimensions:", [s.dim for s in dv.cartan_spans()])

basis = dv.g_basis()
print("Killing form rank:", la.rank(dv.killing_gram(basis)))
