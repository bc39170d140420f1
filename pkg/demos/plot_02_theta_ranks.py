"""
Stabilizers and the Theta maps
==============================

For the four small cases we build g explicitly as the stabilizer of a
defining tensor and assemble Theta_1 : Lambda^3 -> R^n (x) m as an exact
rational matrix.  Full column rank means a skew torsion, when it exists, is
unique; for Spin(7) the matrix is square and invertible.
"""

from math import comb

from gstructures.models import EXPECTED_DIM, defining_tensor, tensor_detection_rank, stabilizer_algebra, theta_maps

for name in EXPECTED_DIM:
    model = stabilizer_algebra(defining_tensor(name))
    th = theta_maps(model)
    print(
        f"{name:14s} n={model.n}  dim g={model.dim_g:2d}  dim m={model.dim_m:2d}  "
        f"Theta_1: {th.theta1.rows}x{th.theta1.cols}, rank {th.rank1} (Lambda^3 has dim {comb(model.n, 3)})"
    )
    # the tensor detects the whole of R^n (x) m: Gamma -> Gamma . tensor is injective
    print(f"{'':14s} rank of Gamma -> Gamma.tensor = {tensor_detection_rank(model)} = n * dim m = {model.n * model.dim_m}")
