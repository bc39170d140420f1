"""The six G-structure case studies and their torsion reports.

Every character is handled through its complexification.  Real types are
recovered with :func:`gstructures.weights.real_types`, so for U(3) a pair of
conjugate complex summands is one real type of doubled dimension.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .weights import (
    Decomposition,
    RealType,
    RootSystem,
    WeightMultiset,
    decompose,
    irrep_weights,
    real_types,
    root_system,
    tensor_ms,
    wedge_power_ms,
    CharacterError,
)

__all__ = [
    "CASE_NAMES",
    "CaseStudy",
    "TorsionReport",
    "build_case",
    "complement_m",
    "gamma_types",
    "lambda3_types",
    "torsion_report",
    "MODEL_FOR_CASE",
]


@dataclass(frozen=True)
class CaseStudy:
    name: str
    group: str
    rs: RootSystem
    n: int
    defining: tuple[tuple[int, ...], ...]  # highest weights of the complexified R^n
    adjoint: tuple[tuple[int, ...], ...]  # highest weights of the complexified Lie algebra

    def defining_character(self) -> WeightMultiset:
        return _sum_irreps(self.rs, self.defining)

    def adjoint_character(self) -> WeightMultiset:
        return _sum_irreps(self.rs, self.adjoint)

    @property
    def dim_g(self) -> int:
        return self.adjoint_character().count()

    @property
    def defining_key(self) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted(self.defining, reverse=True))


def _sum_irreps(rs, hws) -> WeightMultiset:
    acc = WeightMultiset.empty(rs)
    for hw in hws:
        acc = acc + irrep_weights(rs, hw)
    return acc


# u(1) charge normalised so that C^3 = Lambda^{1,0} has charge 1.
_CASES = {
    "SO3-in-SO5": ("SO(3)", "A1", 5, ((4,),), ((2,),)),
    "U3-in-SO6": ("U(3)", "A2+u1", 6, ((1, 0, 1), (0, 1, -1)), ((1, 1, 0), (0, 0, 0))),
    "G2-in-SO7": ("G2", "G2", 7, ((1, 0),), ((0, 1),)),
    "Spin7-in-SO8": ("Spin(7)", "B3", 8, ((0, 0, 1),), ((0, 1, 0),)),
    "Spin9-in-SO16": ("Spin(9)", "B4", 16, ((0, 0, 0, 1),), ((0, 1, 0, 0),)),
    "F4-in-SO26": ("F4", "F4", 26, ((0, 0, 0, 1),), ((1, 0, 0, 0),)),
}

CASE_NAMES = tuple(_CASES)

# explicit stabilizer models available for the small cases
MODEL_FOR_CASE = {
    "SO3-in-SO5": "so3-cubic",
    "U3-in-SO6": "kaehler-2form",
    "G2-in-SO7": "g2-3form",
    "Spin7-in-SO8": "cayley-4form",
}


@lru_cache(maxsize=None)
def build_case(name: str) -> CaseStudy:
    try:
        group, label, n, defining, adjoint = _CASES[name]
    except KeyError:
        raise KeyError(f"unknown case {name!r}; known: {', '.join(CASE_NAMES)}") from None
    case = CaseStudy(name, group, root_system(label), n, defining, adjoint)
    if case.defining_character().count() != n:
        raise AssertionError(f"{name}: defining character has wrong dimension")
    if case.dim_g != case.rs.dim:
        raise AssertionError(f"{name}: adjoint character does not match dim of the group")
    return case


@lru_cache(maxsize=None)
def _m_character(case: CaseStudy) -> WeightMultiset:
    try:
        return wedge_power_ms(case.defining_character(), 2) - case.adjoint_character()
    except CharacterError as exc:
        raise CharacterError(f"{case.name}: adjoint is not a sub-character of Lambda^2: {exc}") from exc


@lru_cache(maxsize=None)
def complement_m(case: CaseStudy) -> Decomposition:
    """Decomposition of m, the orthogonal complement of g in so(n)."""
    dec = decompose(case.rs, _m_character(case))
    assert dec.dim == comb(case.n, 2) - case.dim_g
    return dec


@lru_cache(maxsize=None)
def gamma_types(case: CaseStudy) -> Decomposition:
    """Irreducible components of R^n (x) m: the non-integrable types."""
    return decompose(case.rs, tensor_ms(case.defining_character(), _m_character(case)))


@lru_cache(maxsize=None)
def lambda3_types(case: CaseStudy) -> Decomposition:
    return decompose(case.rs, wedge_power_ms(case.defining_character(), 3))


@dataclass(frozen=True)
class TorsionReport:
    case: str
    n: int
    dim_g: int
    m: tuple[RealType, ...]
    types: tuple[RealType, ...]
    lambda3: tuple[RealType, ...]
    admissible: tuple[RealType, ...]
    unique_connection: bool
    conformal_closed: bool
    prop2_holds: bool
    theta1_rank: int | None = None  # exact matrix rank when a model exists

    @property
    def excluded(self) -> tuple[RealType, ...]:
        keys = {t.key() for t in self.admissible}
        return tuple(t for t in self.types if t.key() not in keys)


def torsion_report(case: CaseStudy | str, use_models: bool = True) -> TorsionReport:
    """Skew-torsion admissibility of each type of ``case``.

    A type is admissible when it occurs in Lambda^3(R^n); by Schur's lemma the
    Theta_1 image of each isotypic part is then either all of it or zero.
    Where an explicit stabilizer model exists the rank of Theta_1 is computed
    exactly: full rank means Theta_1 is injective, so every common type really
    lies in the image and the connection is unique when it exists.
    """
    if isinstance(case, str):
        case = build_case(case)
    types = real_types(gamma_types(case))
    l3 = real_types(lambda3_types(case))
    tmult = {t.key(): t.multiplicity for t in types}
    admissible = []
    for t in l3:
        k = min(t.multiplicity, tmult.get(t.key(), 0))
        if k:
            admissible.append(RealType(t.members, k))
    embeds = all(t.multiplicity <= tmult.get(t.key(), 0) for t in l3)
    rank1 = None
    if use_models and case.name in MODEL_FOR_CASE:
        from .models import stabilizer_algebra, defining_tensor, theta_maps

        model = stabilizer_algebra(defining_tensor(MODEL_FOR_CASE[case.name]))
        rank1 = theta_maps(model).rank1
        embeds = embeds and rank1 == comb(case.n, 3)
    dkey = case.defining_key
    return TorsionReport(
        case=case.name,
        n=case.n,
        dim_g=case.dim_g,
        m=tuple(real_types(complement_m(case))),
        types=tuple(types),
        lambda3=tuple(l3),
        admissible=tuple(sorted(admissible, key=RealType.sort_key)),
        unique_connection=embeds,
        conformal_closed=any(t.key() == dkey for t in l3),
        prop2_holds=any(t.key() == dkey for t in types),
        theta1_rank=rank1,
    )
