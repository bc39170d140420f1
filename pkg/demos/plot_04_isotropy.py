"""
Isotropy of left-invariant torsion forms
========================================

Two cocalibrated G2 structures on seven-dimensional Lie groups.  The
isotropy algebra of the torsion form bounds the automorphism group of the
structure by n + dim g_T.
"""

from gstructures.models import SOLVABLE_TORUS_BASIS, heisenberg_example, solvable_example, span_contains
from gstructures.textio import skew_entries

# Heisenberg group times a line: first the Ricci tensor and T.T cut g2 down
# to a 4-dimensional family, then the Lie derivative of T cuts it to a line.
res = heisenberg_example()
print("diagonal of T.T:", " ".join(str(row[i]) for i, row in enumerate(res.torsion_square)))
print("constrained family:", len(res.constrained), "dimensional")
print("isotropy:", res.dim, "dimensional, spanned by", skew_entries(res.isotropy[0]))
print("automorphism bound:", res.automorphism_bound())

# %%
# The complex solvable group: the isotropy is a maximal torus of G2.
res = solvable_example()
print("dim g_T =", res.dim, " abelian:", res.is_abelian())
print("contains the two torus matrices:", all(span_contains(res.isotropy, m) for m in SOLVABLE_TORUS_BASIS))
