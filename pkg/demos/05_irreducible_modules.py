"""
Irreducible modules inside tensor powers of V
=============================================

Gamma_{a,b} is generated from the Young-projected vector with a + b copies of
v_(-beta'') in the top row and b copies of v_beta' below.
"""

import time

from octog2 import weyl_modules as wm

for a, b in [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]:
    start = time.perf_counter()
    res = wm.generate_irrep(a, b)
    took = time.perf_counter() - start
    print(
        f"Gamma_{{{a},{b}}}: dim {res.dimension:3d} (Weyl {res.weyl_dimension:3d})"
        f"  degree {res.degree}  highest weight ok: {res.highest_weight_ok}  [{took:.2f} s]"
    )

res = wm.generate_irrep(0, 1)
print("weights of the adjoint module:")
for mu, k in sorted(res.weights.items()):
    print(f"  {mu}: {k}")

adjoint, copy_of_v = wm.wedge2_split()
print(f"wedge^2 V = {adjoint.dim} + {copy_of_v.dim}")
