import random
from collections import Counter
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from gstructures import catalog
from gstructures.weights import (
    CharacterError,
    Decomposition,
    Irrep,
    WeightMultiset,
    char_equal,
    decompose,
    irrep_weights,
    real_types,
    root_system,
    tensor_ms,
    wedge_power_ms,
    weyl_dim,
)

from oracles import ROOT_DATA, exterior_weights, to_eps, weyl_dim_oracle, weyl_orbit


def eps_counter(label, ms: WeightMultiset) -> Counter:
    rank = len(ROOT_DATA[label][0])
    return Counter({to_eps(label, w[:rank]): m for w, m in ms.mults.items()})


def used_irreps():
    """Every (root system, highest weight) that appears in the six case studies."""
    out = set()
    for name in catalog.CASE_NAMES:
        case = catalog.build_case(name)
        hws = set(case.defining) | set(case.adjoint)
        for dec in (catalog.complement_m(case), catalog.gamma_types(case), catalog.lambda3_types(case)):
            hws |= {ir.hw for ir, _ in dec.summands}
        out |= {(case.rs.label, hw) for hw in hws}
    return sorted(out)


class TestRootSystems:
    @pytest.mark.parametrize("label,npos,dim", [("A1", 1, 3), ("A2", 3, 8), ("B3", 9, 21), ("B4", 16, 36), ("G2", 6, 14), ("F4", 24, 52)])
    def test_positive_root_counts(self, label, npos, dim):
        rs = root_system(label)
        assert len(rs.positive_roots) == npos == len(ROOT_DATA[label][1])
        assert rs.dim == dim

    def test_reductive_charge_adds_a_torus(self):
        rs = root_system("A2+u1")
        assert rs.width == 3 and rs.dim == 9

    def test_unknown_label(self):
        with pytest.raises((KeyError, ValueError)):
            root_system("Q7")


class TestWeylDimension:
    @pytest.mark.parametrize(
        "label,hw,dim",
        [
            ("A1", (4,), 5),
            ("A2", (1, 1), 8),
            ("G2", (1, 0), 7),
            ("G2", (0, 1), 14),
            ("G2", (2, 0), 27),
            ("B3", (0, 0, 1), 8),
            ("B3", (0, 1, 0), 21),
            ("B4", (0, 0, 0, 1), 16),
            ("B4", (0, 0, 1, 0), 84),
            ("F4", (0, 0, 0, 1), 26),
            ("F4", (1, 0, 0, 0), 52),
            ("F4", (0, 0, 1, 0), 273),
        ],
    )
    def test_known_dimensions(self, label, hw, dim):
        assert weyl_dim(root_system(label), hw) == dim

    @pytest.mark.parametrize("label", ["A1", "A2", "B3", "B4", "G2", "F4"])
    def test_against_orthogonal_coordinate_formula(self, label):
        rng = random.Random(label)
        rs = root_system(label)
        for _ in range(12):
            hw = tuple(rng.randint(0, 2) for _ in range(rs.rank))
            assert weyl_dim(rs, hw) == weyl_dim_oracle(label, hw)

    def test_non_dominant_rejected(self):
        with pytest.raises(ValueError):
            weyl_dim(root_system("A2"), (-1, 0))


class TestFreudenthal:
    @pytest.mark.parametrize("label,hw", used_irreps())
    def test_count_matches_weyl_dimension_on_every_used_irrep(self, label, hw):
        rs = root_system(label)
        ms = irrep_weights(rs, hw)
        assert ms.count() == weyl_dim(rs, hw)
        semisimple = label.split("+")[0]
        assert ms.count() == weyl_dim_oracle(semisimple, hw[: rs.rank])
        assert ms.is_weyl_invariant()

    @pytest.mark.parametrize(
        "label,hw,seed,zero_mult",
        [
            ("B3", (0, 0, 1), ("1/2", "1/2", "1/2"), 0),
            ("B4", (0, 0, 0, 1), ("1/2", "1/2", "1/2", "1/2"), 0),
            ("F4", (0, 0, 0, 1), (1, 0, 0, 0), 2),
            ("F4", (1, 0, 0, 0), (1, 1, 0, 0), 4),
            ("G2", (1, 0), (0, -1, 1), 1),
            ("G2", (0, 1), (-1, -1, 2), 2),
        ],
    )
    def test_orbit_plus_zero_weights(self, label, hw, seed, zero_mult):
        """Minuscule and quasi-minuscule irreps: one Weyl orbit, plus a zero weight."""
        from fractions import Fraction

        v = tuple(Fraction(x) for x in seed)
        orbit = weyl_orbit(label, v)
        if label == "F4" and hw == (1, 0, 0, 0):
            orbit |= weyl_orbit(label, (Fraction(1), Fraction(0), Fraction(0), Fraction(0)))
        if label == "G2" and hw == (0, 1):
            orbit |= weyl_orbit(label, (Fraction(0), Fraction(-1), Fraction(1)))
        expected = Counter({w: 1 for w in orbit})
        if zero_mult:
            expected[tuple(Fraction(0) for _ in v)] = zero_mult
        assert eps_counter(label, irrep_weights(root_system(label), hw)) == expected

    def test_b4_three_form_type_from_vector_weights(self):
        rs = root_system("B4")
        vec = [to_eps("B4", w) for w, m in irrep_weights(rs, (1, 0, 0, 0)).mults.items() for _ in range(m)]
        assert len(vec) == 9
        assert eps_counter("B4", irrep_weights(rs, (0, 0, 1, 0))) == exterior_weights(vec, 3)
        assert irrep_weights(rs, (0, 0, 1, 0)).count() == 84


class TestOperations:
    @pytest.mark.parametrize("name", [c for c in catalog.CASE_NAMES if c != "U3-in-SO6"])
    @pytest.mark.parametrize("k", [2, 3])
    def test_exterior_powers_against_brute_force(self, name, k):
        case = catalog.build_case(name)
        label = case.rs.label
        chi = case.defining_character()
        flat = [to_eps(label, w) for w, m in chi.mults.items() for _ in range(m)]
        got = wedge_power_ms(chi, k)
        assert got.count() == comb(case.n, k)
        assert eps_counter(label, got) == exterior_weights(flat, k)

    def test_exterior_power_with_charges(self):
        rs = root_system("A2+u1")
        chi = irrep_weights(rs, (1, 0, 1)) + irrep_weights(rs, (0, 1, -1))
        flat = [w for w, m in chi.mults.items() for _ in range(m)]
        for k in (2, 3):
            brute = Counter()
            from itertools import combinations

            for combo in combinations(flat, k):
                brute[tuple(map(sum, zip(*combo)))] += 1
            assert Counter(wedge_power_ms(chi, k).mults) == brute

    def test_lambda2_count_formula(self):
        rs = root_system("F4")
        chi = irrep_weights(rs, (0, 0, 0, 1))
        assert wedge_power_ms(chi, 2).count() == 26 * 25 // 2

    def test_tensor_count(self):
        rs = root_system("F4")
        assert tensor_ms(irrep_weights(rs, (0, 0, 0, 1)), irrep_weights(rs, (0, 0, 1, 0))).count() == 7098

    @pytest.mark.parametrize("a,b", [(1, 1), (2, 3), (4, 4), (5, 2)])
    def test_clebsch_gordan(self, a, b):
        rs = root_system("A1")
        dec = decompose(rs, tensor_ms(irrep_weights(rs, (a,)), irrep_weights(rs, (b,))))
        assert sorted(ir.hw[0] for ir, m in dec.summands for _ in range(m)) == list(range(abs(a - b), a + b + 1, 2))

    def test_char_equal(self):
        rs = root_system("G2")
        seven = irrep_weights(rs, (1, 0))
        lhs = wedge_power_ms(seven, 2)
        rhs = seven + irrep_weights(rs, (0, 1))
        assert char_equal(lhs, rhs)
        assert not char_equal(lhs, seven)

    def test_negative_multiplicity_raises(self):
        rs = root_system("A1")
        with pytest.raises(CharacterError):
            WeightMultiset(rs, {(0,): -1})
        with pytest.raises(CharacterError):
            irrep_weights(rs, (1,)) - irrep_weights(rs, (2,))

    def test_decompose_rejects_non_character(self):
        rs = root_system("A1")
        with pytest.raises(CharacterError):
            decompose(rs, WeightMultiset(rs, {(2,): 1}))

    def test_conjugate_pairs_form_one_real_type(self):
        rs = root_system("A2+u1")
        dec = decompose(rs, irrep_weights(rs, (1, 0, 1)) + irrep_weights(rs, (0, 1, -1)))
        types = real_types(dec)
        assert [(t.real_dim, t.multiplicity, len(t.members)) for t in types] == [(6, 1, 2)]


@st.composite
def irrep_sums(draw):
    label = draw(st.sampled_from(["A1", "A2", "B3", "G2"]))
    rs = root_system(label)
    bound = {"A1": 6, "A2": 3, "B3": 1, "G2": 1}[label]
    hws = draw(
        st.lists(st.tuples(*[st.integers(0, bound)] * rs.rank), min_size=1, max_size=4)
    )
    return rs, hws


@settings(max_examples=40, deadline=None)
@given(irrep_sums())
def test_decompose_round_trip(data):
    rs, hws = data
    ms = WeightMultiset.empty(rs)
    for hw in hws:
        ms = ms + irrep_weights(rs, hw)
    dec = decompose(rs, ms)
    assert Counter({ir.hw: m for ir, m in dec.summands}) == Counter(hws)
    assert char_equal(dec.character(), ms)
    dims = [ir.dim for ir, _ in dec.summands]
    assert dims == sorted(dims)


def test_decomposition_merges_and_sorts():
    rs = root_system("A2")
    d = Decomposition(rs, ((Irrep(rs, (1, 1)), 1), (Irrep(rs, (0, 0)), 2), (Irrep(rs, (1, 1)), 1)))
    assert [(ir.hw, m) for ir, m in d.summands] == [((0, 0), 2), ((1, 1), 2)]
    assert d.dims() == [1, 1, 8, 8]
