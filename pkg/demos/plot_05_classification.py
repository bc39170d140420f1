"""
Which groups have Lambda^3 = R^n (x) m?
=======================================

Comparing characters at the identity and at the involutions of a maximal
torus leaves a finite list of (rank t, k) with n = 2^(t-1) k and
3 dim G + 1 = n^2.  Each candidate is eliminated by a named rule except one.
"""

from gstructures.classify import enumerate_cases, involution_p, involution_property, spin7_centralizer_dims

for c in enumerate_cases():
    print(f"t={c.t} k={c.k} dim={c.g} n={c.n}: {c.verdict} {c.rule}")
    for line in c.subtraces:
        print("    ", line)

# %%
# The survivor is a 21-dimensional rank 3 group in SO(8).  Spin(7) passes the
# involution test: none of its involution classes gives an admissible p.
for r, z in spin7_centralizer_dims().items():
    print(r, z, involution_p(21, z, 8))

# %%
# SU(3) produces a candidate p = 2 but has no faithful 5-dimensional real
# representation, so the property still holds.
print("\n".join(involution_property("SU", m=3).trace))
