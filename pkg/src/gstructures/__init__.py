"""Exact computations for G-structures with skew-symmetric torsion.

Submodules:

* :mod:`~gstructures.tensor` - sparse exterior algebra over the rationals
* :mod:`~gstructures.linalg` - fraction-free rank, kernel and solve
* :mod:`~gstructures.weights` - root systems, characters and decompositions
* :mod:`~gstructures.catalog` - the six case studies and their torsion reports
* :mod:`~gstructures.models` - explicit stabilizer algebras and Theta maps
* :mod:`~gstructures.classify` - the dimension/rank search for Spin(7)
* :mod:`~gstructures.cli` - command line reports
"""

from .catalog import CASE_NAMES, MODEL_FOR_CASE, build_case, complement_m, gamma_types, lambda3_types, torsion_report
from .classify import enumerate_cases, involution_p, involution_property, survivors
from .linalg import LinearMap, exact_kernel, rank, solve
from .models import (
    defining_tensor,
    heisenberg_example,
    isotropy_algebra,
    pr_split,
    solvable_example,
    solve_torsion,
    stabilizer_algebra,
    theta_maps,
    torsion_square,
)
from .tensor import Multivector, SkewEndo, contract2, e, so_act, wedge
from .weights import CharacterError, char_equal, decompose, irrep_weights, root_system, weyl_dim

__version__ = "0.1.0"

__all__ = [
    "CASE_NAMES",
    "MODEL_FOR_CASE",
    "CharacterError",
    "LinearMap",
    "Multivector",
    "SkewEndo",
    "build_case",
    "char_equal",
    "complement_m",
    "contract2",
    "decompose",
    "defining_tensor",
    "e",
    "enumerate_cases",
    "exact_kernel",
    "gamma_types",
    "heisenberg_example",
    "involution_p",
    "involution_property",
    "irrep_weights",
    "isotropy_algebra",
    "lambda3_types",
    "pr_split",
    "rank",
    "root_system",
    "so_act",
    "solvable_example",
    "solve",
    "solve_torsion",
    "stabilizer_algebra",
    "survivors",
    "theta_maps",
    "torsion_report",
    "torsion_square",
    "wedge",
    "weyl_dim",
]
