"""Explicit matrix models g = stab(tensor) inside so(n), n = 5..8.

Bases of g and m are kept orthogonal but unnormalised: each basis element v
carries its squared norm q = <v, v>, and the orthonormal element v/sqrt(q)
only ever enters through v (x) v / q, which is rational.

Elements of R^n (x) m are stored as a list of n skew matrices
(the value Gamma(e_k) for each direction k); Theta maps are assembled
in the coordinates c[k, i] of Gamma(e_k) = sum_i c[k, i] v_i.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import comb, gcd
from typing import Iterable, Sequence

from .linalg import LinearMap, exact_kernel, rank, solve_many
from .tensor import (
    Multivector,
    SkewEndo,
    SymmetricTensor,
    contract2,
    e,
    hodge_star,
    lie_derivative,
    so_act,
    so_pairs,
    wedge,
)

__all__ = [
    "DefiningTensor",
    "StabilizerModel",
    "ThetaMaps",
    "NoSolution",
    "Unique",
    "Family",
    "defining_tensor",
    "stabilizer_algebra",
    "theta_maps",
    "theta1_apply",
    "theta2_apply",
    "full_contraction",
    "solve_torsion",
    "solve_torsion_many",
    "pr_split",
    "isotropy_algebra",
    "torsion_square",
    "invariance_constraints",
    "constrained_subalgebra",
    "tensor_detection_rank",
    "gamma_from_coords",
    "gamma_coords",
    "span_contains",
    "heisenberg_torsion",
    "heisenberg_example",
    "solvable_torsion",
    "solvable_example",
    "SOLVABLE_TORUS_BASIS",
    "HEISENBERG_RICCI",
    "IsotropyResult",
    "EXPECTED_DIM",
]

Gamma = list[SkewEndo]

EXPECTED_DIM = {"so3-cubic": 3, "kaehler-2form": 9, "g2-3form": 14, "cayley-4form": 21}


@dataclass(frozen=True)
class DefiningTensor:
    name: str
    kind: str  # alternating-2 | alternating-3 | alternating-4 | symmetric-3-traceless
    value: Multivector | SymmetricTensor

    @property
    def dim(self) -> int:
        return self.value.dim

    def __post_init__(self):
        v = self.value
        if self.kind.startswith("alternating"):
            if not isinstance(v, Multivector) or v.grade != int(self.kind[-1]):
                raise ValueError(f"{self.name}: value does not match kind {self.kind}")
        elif self.kind == "symmetric-3-traceless":
            if not isinstance(v, SymmetricTensor) or v.grade != 3 or v.laplacian():
                raise ValueError(f"{self.name}: not a traceless symmetric 3-tensor")
        else:
            raise ValueError(f"unknown tensor kind {self.kind!r}")


def _g2_form() -> Multivector:
    terms = [((1, 2, 7), 1), ((1, 3, 5), 1), ((1, 4, 6), -1), ((2, 3, 6), -1), ((2, 4, 5), -1), ((3, 4, 7), 1), ((5, 6, 7), 1)]
    return Multivector.from_unsorted(7, 3, terms)


def _lift(form: Multivector, n: int) -> Multivector:
    return Multivector(n, form.grade, form.terms)


def _cayley_form() -> Multivector:
    phi = _g2_form()
    return wedge(e(8, dim=8), _lift(phi, 8)) + _lift(hodge_star(phi), 8)


# Traceless symmetric 3x3 matrices [[a, c, d], [c, b, e], [d, e, -a-b]] given by
# (a, b, c, d, e).  These five are pairwise orthogonal for trace(XY) with
# trace(X^2) = 6 each, so they are an orthonormal basis of R^5 up to one scale.
_SO3_FRAME = [(-2, 1, 0, 0, 0), (0, -1, -1, -1, 0), (0, -1, 0, 1, -1), (0, -1, 1, 0, 1), (0, 0, -1, 1, 1)]


def _sym3(a, b, c, d, e_):
    return [[a, c, d], [c, b, e_], [d, e_, -a - b]]


def _mat3(x, y):
    return [[sum(x[i][k] * y[k][j] for k in range(3)) for j in range(3)] for i in range(3)]


def _so3_cubic() -> SymmetricTensor:
    frame = [_sym3(*v) for v in _SO3_FRAME]
    acc: dict[tuple[int, ...], Fraction] = {}
    for i in range(5):
        for j in range(i, 5):
            for k in range(j, 5):
                total = 0
                for a, b, c in set(permutations((i, j, k))):
                    prod = _mat3(_mat3(frame[a], frame[b]), frame[c])
                    total += prod[0][0] + prod[1][1] + prod[2][2]
                if total:
                    acc[(i + 1, j + 1, k + 1)] = Fraction(total)
    return SymmetricTensor(5, 3, acc)


def defining_tensor(name: str) -> DefiningTensor:
    if name == "g2-3form":
        return DefiningTensor(name, "alternating-3", _g2_form())
    if name == "cayley-4form":
        return DefiningTensor(name, "alternating-4", _cayley_form())
    if name == "kaehler-2form":
        return DefiningTensor(name, "alternating-2", e(1, 2, dim=6) + e(3, 4, dim=6) + e(5, 6, dim=6))
    if name == "so3-cubic":
        return DefiningTensor(name, "symmetric-3-traceless", _so3_cubic())
    raise KeyError(f"unknown defining tensor {name!r}; known: {', '.join(EXPECTED_DIM)}")


def _tensor_coords(t) -> dict:
    return dict(t.terms)


def _action_matrix(basis: Sequence[SkewEndo], t) -> list[list[Fraction]]:
    """Rows indexed by tensor monomials, columns by ``basis``: A -> so_act(A, t)."""
    images = [_tensor_coords(so_act(b, t)) for b in basis]
    keys = sorted({k for im in images for k in im})
    return [[im.get(k, Fraction(0)) for im in images] for k in keys]


def _gram_schmidt(vectors: Iterable[Sequence[Fraction]]) -> tuple[list[list[Fraction]], list[Fraction]]:
    out: list[list[Fraction]] = []
    norms: list[Fraction] = []
    for u in vectors:
        v = [Fraction(x) for x in u]
        for w, q in zip(out, norms):
            c = sum((a * b for a, b in zip(v, w)), Fraction(0)) / q
            if c:
                v = [a - c * b for a, b in zip(v, w)]
        # clear denominators for readability; the norm is tracked exactly
        den = 1
        for x in v:
            den = den * x.denominator // _gcd(den, x.denominator)
        v = [x * den for x in v]
        g = 0
        for x in v:
            g = _gcd(g, int(x))
        if g > 1:
            v = [x / g for x in v]
        q = sum((a * a for a in v), Fraction(0))
        if q:
            out.append(v)
            norms.append(q)
    return out, norms


def _gcd(a, b) -> int:
    return gcd(int(a), int(b))


@dataclass(frozen=True, eq=False)
class StabilizerModel:
    n: int
    tensor: DefiningTensor
    g_basis: tuple[SkewEndo, ...]
    g_norms: tuple[Fraction, ...]
    m_basis: tuple[SkewEndo, ...]
    m_norms: tuple[Fraction, ...]
    expected_dim_g: int
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def dim_g(self) -> int:
        return len(self.g_basis)

    @property
    def dim_m(self) -> int:
        return len(self.m_basis)


@lru_cache(maxsize=None)
def stabilizer_algebra(tensor: DefiningTensor) -> StabilizerModel:
    """g = {A in so(n) : A . tensor = 0} with orthogonal bases of g and m."""
    n = tensor.dim
    elementary = [SkewEndo.elementary(n, i, j) for i, j in so_pairs(n)]
    rows = _action_matrix(elementary, tensor.value)
    _, ker = exact_kernel(rows, len(elementary))
    expected = EXPECTED_DIM.get(tensor.name)
    if expected is not None and len(ker) != expected:
        raise AssertionError(f"{tensor.name}: stabilizer has dimension {len(ker)}, expected {expected}")
    g_vecs, g_norms = _gram_schmidt(ker)
    _, comp = exact_kernel(g_vecs, len(elementary)) if g_vecs else (0, [list(r) for r in _identity(len(elementary))])
    m_vecs, m_norms = _gram_schmidt(comp)
    return StabilizerModel(
        n=n,
        tensor=tensor,
        g_basis=tuple(SkewEndo.from_coords(n, v) for v in g_vecs),
        g_norms=tuple(g_norms),
        m_basis=tuple(SkewEndo.from_coords(n, v) for v in m_vecs),
        m_norms=tuple(m_norms),
        expected_dim_g=expected if expected is not None else len(ker),
    )


def _identity(k):
    return [[Fraction(int(i == j)) for j in range(k)] for i in range(k)]


def _project(omega: SkewEndo, basis, norms) -> list[Fraction]:
    """Coordinates of the orthogonal projection of omega onto span(basis)."""
    return [omega.inner(v) / q for v, q in zip(basis, norms)]


def _combine(n: int, coords, basis) -> SkewEndo:
    acc = [Fraction(0)] * comb(n, 2)
    for c, v in zip(coords, basis):
        if c:
            acc = [a + c * x for a, x in zip(acc, v.coords())]
    return SkewEndo.from_coords(n, acc)


def pr_split(model: StabilizerModel, omega: SkewEndo) -> tuple[SkewEndo, SkewEndo]:
    g_part = _combine(model.n, _project(omega, model.g_basis, model.g_norms), model.g_basis)
    return g_part, omega - g_part


def gamma_coords(model: StabilizerModel, gamma: Gamma) -> list[Fraction]:
    """Coordinates c[k, i] (k-major) of an R^n (x) m element w.r.t. e_k (x) v_i."""
    if len(gamma) != model.n:
        raise ValueError(f"need {model.n} skew matrices, got {len(gamma)}")
    out = []
    for k, val in enumerate(gamma):
        g_part, _ = pr_split(model, val)
        if g_part:
            raise ValueError(f"Gamma(e_{k + 1}) has a nonzero g-component")
        out.extend(_project(val, model.m_basis, model.m_norms))
    return out


def gamma_from_coords(model: StabilizerModel, coords: Sequence, basis: str = "m") -> Gamma:
    vecs = model.m_basis if basis == "m" else model.g_basis
    d = len(vecs)
    return [_combine(model.n, coords[k * d : (k + 1) * d], vecs) for k in range(model.n)]


def _theta_matrix(model: StabilizerModel, basis, norms) -> LinearMap:
    n = model.n
    cols = []
    for key in Multivector.basis(n, 3):
        T = Multivector(n, 3, {key: 1})
        contr = [contract2(v.to_bivector(), T) for v in basis]
        col = []
        for k in range(1, n + 1):
            for c, q in zip(contr, norms):
                col.append(c.terms.get((k,), Fraction(0)) / q)
        cols.append(col)
    return LinearMap.from_columns(cols, n * len(basis))


@dataclass(frozen=True)
class ThetaMaps:
    theta1: LinearMap  # Lambda^3 -> R^n (x) m, coordinates as in gamma_coords
    theta2: LinearMap  # Lambda^3 -> R^n (x) g, same layout over the g basis
    rank1: int


def theta_maps(model: StabilizerModel) -> ThetaMaps:
    """Theta_1(T) = sum_i (s_i _| T) (x) s_i and Theta_2 likewise over g."""
    if "theta" not in model._cache:
        t1 = _theta_matrix(model, model.m_basis, model.m_norms)
        t2 = _theta_matrix(model, model.g_basis, model.g_norms)
        model._cache["theta"] = ThetaMaps(t1, t2, t1.rank())
    return model._cache["theta"]


def theta1_apply(model: StabilizerModel, T: Multivector) -> Gamma:
    return gamma_from_coords(model, theta_maps(model).theta1 @ T.coords(), "m")


def theta2_apply(model: StabilizerModel, T: Multivector) -> Gamma:
    return gamma_from_coords(model, theta_maps(model).theta2 @ T.coords(), "g")


def full_contraction(T: Multivector) -> Gamma:
    """sum over the monomial basis e_ab of (e_ab _| T) (x) e_ab; model independent."""
    n = T.dim
    return [SkewEndo.from_coords(n, [T.coefficient(a, b, k) for a, b in so_pairs(n)]) for k in range(1, n + 1)]


@dataclass(frozen=True)
class NoSolution:
    pass


@dataclass(frozen=True)
class Unique:
    T: Multivector


@dataclass(frozen=True)
class Family:
    T0: Multivector
    kernel: tuple[Multivector, ...]


def solve_torsion_many(model: StabilizerModel, gammas: Sequence[Gamma]) -> list[NoSolution | Unique | Family]:
    """Solve Theta_1(T) = -2 Gamma for each Gamma."""
    th = theta_maps(model)
    rhs = [[-2 * c for c in gamma_coords(model, g)] for g in gammas]
    sols, kernel = solve_many(th.theta1.entries, rhs, th.theta1.cols)
    n = model.n
    ker = tuple(Multivector.from_coords(n, 3, v) for v in kernel)
    out: list[NoSolution | Unique | Family] = []
    for x in sols:
        if x is None:
            out.append(NoSolution())
        elif ker:
            out.append(Family(Multivector.from_coords(n, 3, x), ker))
        else:
            out.append(Unique(Multivector.from_coords(n, 3, x)))
    return out


def solve_torsion(model: StabilizerModel, gamma: Gamma) -> NoSolution | Unique | Family:
    return solve_torsion_many(model, [gamma])[0]


def tensor_detection_rank(model: StabilizerModel) -> int:
    """Rank of Gamma -> rho_*(Gamma)(tensor) on R^n (x) m.

    The map acts direction by direction, so its rank is n times the rank of
    A -> A . tensor on m.
    """
    rows = _action_matrix(model.m_basis, model.tensor.value)
    return model.n * (rank(rows) if rows else 0)


def span_contains(basis: Sequence[SkewEndo], x: SkewEndo) -> bool:
    if not basis:
        return not x
    rows = [b.coords() for b in basis]
    return rank(rows + [x.coords()]) == rank(rows)


def isotropy_algebra(model: StabilizerModel, T: Multivector, within: Sequence[SkewEndo] | None = None) -> list[SkewEndo]:
    """Elements of g (or of the subspace ``within`` of g) annihilating T."""
    if T.dim != model.n:
        raise ValueError("torsion form has the wrong dimension")
    space = list(model.g_basis if within is None else within)
    if not space:
        return []
    rows = _action_matrix(space, T)
    if not rows:
        return space
    _, ker = exact_kernel(rows, len(space))
    return [_combine(model.n, v, space) for v in ker]


def torsion_square(T: Multivector) -> list[list[Fraction]]:
    """S_ij = sum_{m,n} T_imn T_jmn with T_abc fully antisymmetric."""
    n = T.dim
    S = [[Fraction(0)] * n for _ in range(n)]
    for k1, c1 in T.terms.items():
        for k2, c2 in T.terms.items():
            for p1 in range(3):
                i = k1[p1]
                rest1 = k1[:p1] + k1[p1 + 1 :]
                for p2 in range(3):
                    rest2 = k2[:p2] + k2[p2 + 1 :]
                    if rest1 != rest2:
                        continue
                    # T_{i r s} = (-1)^p1 c1 for the sorted pair (r, s); both orders of (m, n) count
                    j = k2[p2]
                    S[i - 1][j - 1] += 2 * (-1) ** (p1 + p2) * c1 * c2
    return S


def _commutator_rows(n: int, D: Sequence[Sequence]) -> list[list[Fraction]]:
    """Rows (in so(n) coordinates) of the linear conditions D Omega - Omega D = 0."""
    pairs = so_pairs(n)
    cols = []
    for i, j in pairs:
        E = SkewEndo.elementary(n, i, j).entries
        col = []
        for a in range(n):
            for b in range(n):
                col.append(
                    sum((Fraction(D[a][k]) * E[k][b] - E[a][k] * Fraction(D[k][b]) for k in range(n)), Fraction(0))
                )
        cols.append(col)
    rows = [list(r) for r in zip(*cols)]
    return [r for r in rows if any(r)]


def invariance_constraints(model: StabilizerModel | None, diagonals: Sequence[Sequence[Sequence]], n: int | None = None):
    """Linear conditions Omega^T D + D Omega = 0 for each symmetric D.

    With a model the equations are returned in g-coordinates
    (Omega = sum_j x_j v_j); with ``model=None`` they are returned in so(n)
    coordinates.  Rows are reduced to an independent set.
    """
    if model is not None:
        n = model.n
    if n is None:
        raise ValueError("need a model or n")
    rows: list[list[Fraction]] = []
    for D in diagonals:
        if len(D) != n or any(Fraction(D[i][j]) != Fraction(D[j][i]) for i in range(n) for j in range(n)):
            raise ValueError("constraint matrices must be symmetric n x n")
        rows.extend(_commutator_rows(n, D))
    if model is not None:
        rows = [[sum((r[p] * c for p, c in enumerate(v.coords())), Fraction(0)) for v in model.g_basis] for r in rows]
    return _independent_rows(rows)


def _independent_rows(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    out: list[list[Fraction]] = []
    rk = 0
    for r in rows:
        if not any(r):
            continue
        if rank(out + [r]) > rk:
            out.append(r)
            rk += 1
    return out


def constrained_subalgebra(model: StabilizerModel, diagonals) -> list[SkewEndo]:
    """Basis of the elements of g commuting with every given symmetric matrix."""
    eqs = invariance_constraints(model, diagonals)
    if not eqs:
        return list(model.g_basis)
    _, ker = exact_kernel(eqs, model.dim_g)
    return [_combine(model.n, v, model.g_basis) for v in ker]


# --- the two left-invariant cocalibrated G2 examples -------------------------------

HEISENBERG_RICCI = [-2, 0, -2, 0, 0, -2, -2]


def heisenberg_torsion() -> Multivector:
    """T = e5 ^ (e13 - e67) + e4 ^ (e37 + e16) on H^6 x R."""
    d = 7
    return wedge(e(5, dim=d), e(1, 3, dim=d) - e(6, 7, dim=d)) + wedge(e(4, dim=d), e(3, 7, dim=d) + e(1, 6, dim=d))


def solvable_torsion() -> Multivector:
    return 2 * (e(2, 5, 6, dim=7) - e(2, 3, 4, dim=7))


def _matrix(rows):
    n = len(rows)
    return SkewEndo(n, tuple(tuple(Fraction(x) for x in r) for r in rows))


SOLVABLE_TORUS_BASIS = (
    _matrix(
        [
            [0, 0, 0, 0, 0, 0, -2],
            [0, 0, 0, 0, 0, 0, 0],
            [0, 0, 0, 0, 0, 1, 0],
            [0, 0, 0, 0, 1, 0, 0],
            [0, 0, 0, -1, 0, 0, 0],
            [0, 0, -1, 0, 0, 0, 0],
            [2, 0, 0, 0, 0, 0, 0],
        ]
    ),
    _matrix(
        [
            [0, 0, 0, 0, 0, 0, 0],
            [0, 0, 0, 0, 0, 0, 0],
            [0, 0, 0, 1, 0, 0, 0],
            [0, 0, -1, 0, 0, 0, 0],
            [0, 0, 0, 0, 0, -1, 0],
            [0, 0, 0, 0, 1, 0, 0],
            [0, 0, 0, 0, 0, 0, 0],
        ]
    ),
)


def _diag(values):
    n = len(values)
    return [[Fraction(values[i]) if i == j else Fraction(0) for j in range(n)] for i in range(n)]


@dataclass(frozen=True)
class IsotropyResult:
    torsion: Multivector
    torsion_square: list
    constrained: list  # g intersected with the invariance constraints
    isotropy: list  # final g_T
    lie_derivatives: list  # Lie derivative of T along each constrained basis element

    @property
    def dim(self) -> int:
        return len(self.isotropy)

    def is_abelian(self) -> bool:
        return all(not a.bracket(b) for a in self.isotropy for b in self.isotropy)

    def automorphism_bound(self) -> int:
        """n + dim g_T, the bound on the dimension of the automorphism group."""
        return self.torsion.dim + self.dim


def heisenberg_example() -> IsotropyResult:
    """Two-stage isotropy computation: constraints from Ric and T.T first, then ker(L_. T)."""
    model = stabilizer_algebra(defining_tensor("g2-3form"))
    T = heisenberg_torsion()
    S = torsion_square(T)
    family = constrained_subalgebra(model, [_diag(HEISENBERG_RICCI), S])
    iso = isotropy_algebra(model, T, within=family)
    return IsotropyResult(T, S, family, iso, [lie_derivative(x, T) for x in family])


def solvable_example() -> IsotropyResult:
    model = stabilizer_algebra(defining_tensor("g2-3form"))
    T = solvable_torsion()
    iso = isotropy_algebra(model, T)
    return IsotropyResult(T, torsion_square(T), list(model.g_basis), iso, [])
