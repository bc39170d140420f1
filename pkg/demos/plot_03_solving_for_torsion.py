"""
Solving for the skew torsion
============================

Given an intrinsic torsion Gamma, a connection with skew torsion T exists iff
Theta_1(T) = -2 Gamma is solvable.  On a G2 model we solve one admissible
Gamma and then show that a Gamma in the excluded 14-dimensional type has no
solution.
"""

from fractions import Fraction

from gstructures.linalg import exact_kernel
from gstructures.models import NoSolution, defining_tensor, gamma_from_coords, solve_torsion, stabilizer_algebra, theta1_apply, theta_maps
from gstructures.tensor import e
from gstructures.textio import format_form

model = stabilizer_algebra(defining_tensor("g2-3form"))

# an admissible Gamma, built from a known 3-form
T0 = e(1, 2, 3, dim=7) - 2 * e(4, 5, 6, dim=7)
gamma = [Fraction(-1, 2) * x for x in theta1_apply(model, T0)]
sol = solve_torsion(model, gamma)
print("recovered torsion:")
print(format_form(sol.T))

# %%
# The orthogonal complement of the image of Theta_1 is the excluded type.
th = theta_maps(model)
d = model.dim_m
rows = [[th.theta1.entries[r][c] * model.m_norms[r % d] for r in range(th.theta1.rows)] for c in range(th.theta1.cols)]
_, complement = exact_kernel(rows, th.theta1.rows)
print("dimension of the excluded part:", len(complement))
bad = gamma_from_coords(model, complement[0])
print("solvable?", not isinstance(solve_torsion(model, bad), NoSolution))
