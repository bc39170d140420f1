"""
Types of G-structures from characters
=====================================

The intrinsic torsion of a G-structure on R^n lives in R^n (x) m, where m is
the complement of g in so(n).  Its irreducible pieces are the possible
"types".  A type can carry a connection with skew torsion only if it also
occurs in Lambda^3(R^n).  Everything below is computed from weight
multisets; no matrices are involved.
"""

from gstructures.catalog import CASE_NAMES, torsion_report


def dims(types):
    return [t.real_dim for t in types for _ in range(t.multiplicity)]


# each case is a compact group acting irreducibly on R^n
for name in CASE_NAMES:
    rep = torsion_report(name, use_models=False)
    print(f"{name:15s} m = {dims(rep.m)}")
    print(f"{'':15s} R^n (x) m  -> {dims(rep.types)}")
    print(f"{'':15s} Lambda^3   -> {dims(rep.lambda3)}")
    print(f"{'':15s} excluded   -> {dims(rep.excluded)}   conformal_closed = {rep.conformal_closed}")

# %%
# U(3) is handled through its complexification: each real type is a pair of
# complex conjugate summands, labelled by su(3) Dynkin labels and u(1) charge.
for t in torsion_report("U3-in-SO6", use_models=False).types:
    print(t.real_dim, t.label)
