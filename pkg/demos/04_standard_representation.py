"""
The 7-dimensional representation
================================

The weight vectors of V = Im(O) are v_0 = e0 and v_beta = i e1 + e3 with
their Frobenius and conjugate images.  Each E_rho moves weight vectors along
root directions with coefficient 1, -1 or -2.
"""

from octog2 import standard_rep as sr
from octog2.roots import ALL_ROOTS

for w in sr.WEIGHT_LABELS:
    label = "0" if w is None else str(w)
    print(f"v_{label:8s} = {sr.weight_vector(w)}   weight {sr.weight_coordinates(w)}")

print()
header = "".join(f"{('0' if w is None else str(w)):>9}" for w in sr.WEIGHT_LABELS)
print(" " * 11 + header)
for r, row in zip(ALL_ROOTS, sr.action_table()):
    print(f"E_{str(r):9s}" + "".join(f"{str(c):>9}" for c in row))
