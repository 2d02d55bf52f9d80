"""
A Chevalley basis with integer structure constants
==================================================

H_beta = -i e13, H_gamma = (i/3)(e13 - e26).  E_beta and E_gamma are explicit;
Frobenius and complex conjugation carry them to the other ten roots.
"""

from octog2 import chevalley as ch
from octog2.cli import g_expression
from octog2.roots import ALL_ROOTS

for name, x in ch.chevalley_basis().named():
    print(f"{name:12s} = {g_expression(x)}")

sc = ch.structure_constants()
names = ch.basis_names()
print()
print("nonzero brackets among positive simple root vectors:")
for a, b in [("E_beta", "E_gamma"), ("E_beta", "E_beta'"), ("E_beta", "E_-beta")]:
    terms = [f"{c:+d} {n}" for c, n in zip(sc[(a, b)], names) if c]
    print(f"  [{a}, {b}] = {' '.join(terms)}")

# the opposite-root bracket comes out as minus the transported coroot
r = ALL_ROOTS[0]
print("[E_beta, E_-beta] == -H_beta:", ch.E_vector(r).op.commutator(ch.E_vector(-r).op) == -ch.coroot(r).op)

entries = {c for v in sc.values() for c in v}
print("distinct structure constants:", sorted(entries))
