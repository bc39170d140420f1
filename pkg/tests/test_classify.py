from fractions import Fraction
from math import isqrt

import pytest
from hypothesis import given, settings, strategies as st

from gstructures.classify import (
    EXCEPTIONAL,
    E6_DIM_VARIANT,
    card,
    character_constraint,
    enumerate_cases,
    involution_p,
    involution_property,
    lemma_bound,
    min_real_dim,
    product_card,
    rank_bound,
    simple_dim,
    spin7_centralizer_dims,
    survivors,
)


class TestDimensionTables:
    @pytest.mark.parametrize("m", range(1, 9))
    def test_classical_formulas(self, m):
        assert simple_dim(f"A{m}") == m * m + 2 * m
        assert simple_dim(f"B{m}") == simple_dim(f"C{m}") == 2 * m * m + m
        assert simple_dim(f"D{m}") == 2 * m * m - m

    def test_exceptional_dimensions(self):
        assert {k: v[1] for k, v in EXCEPTIONAL.items()} == {"G2": 14, "F4": 52, "E6": 78, "E7": 133, "E8": 248}
        # the variant value for E6 also satisfies the rank bound
        assert E6_DIM_VARIANT <= 4 * 36 and simple_dim("E6") <= 4 * 36

    def test_minimal_real_dimensions(self):
        assert [min_real_dim("SU", m) for m in (3, 4)] == [6, 8]
        assert min_real_dim("Sp", 2) == 8
        assert min_real_dim("SO", 7) == 7
        assert [min_real_dim(x) for x in ("G2", "F4", "E6", "E7", "E8")] == [7, 26, 54, 112, 248]
        with pytest.raises(ValueError):
            min_real_dim("Z")


class TestDimensionBound:
    @pytest.mark.parametrize("label", ["A1", "A5", "B3", "C4", "D6", "G2", "F4", "E6", "E7", "E8", "T2"])
    def test_every_simple_algebra_satisfies_the_bound(self, label):
        b4, b3 = lemma_bound(card(label))
        assert b4
        if label not in EXCEPTIONAL:
            assert b3

    def test_exceptionals_violate_the_sharper_bound(self):
        # G2: 14 > 12, F4: 52 > 48; the 3t^2 bound is only claimed without exceptional parts
        assert card("G2").dim > 3 * 4 and card("F4").dim > 3 * 16
        assert lemma_bound(card("G2"))[1] is None

    @settings(max_examples=60, deadline=None)
    @given(
        st.sampled_from(["A1", "A2", "A7", "B2", "B5", "C3", "D4", "D7", "G2", "F4", "E6", "E7", "E8", "T1", "T3"]),
        st.sampled_from(["A1", "A3", "B3", "C2", "D5", "G2", "F4", "E8", "T2"]),
    )
    def test_product_rule(self, a, b):
        ca, cb = card(a), card(b)
        assert lemma_bound(ca)[0] and lemma_bound(cb)[0]
        prod = product_card(ca, cb)
        assert prod.dim == ca.dim + cb.dim and prod.rank == ca.rank + cb.rank
        assert lemma_bound(prod)[0]
        assert ca * cb == prod


class TestCharacterConstraint:
    @pytest.mark.parametrize("g,n", [(21, 8), (14, None), (0, 1), (5, 4), (85, 16), (52, None)])
    def test_examples(self, g, n):
        assert character_constraint(g) == n

    def test_negative(self):
        with pytest.raises(ValueError):
            character_constraint(-1)


class TestInvolutions:
    def test_su3_raw_roots(self):
        res = involution_p(8, 4, 5)
        assert res.raw_roots == (2, 3)
        assert res.candidates == (2,)

    def test_spin7_scan_is_empty(self):
        dims = spin7_centralizer_dims()
        assert dims == {0: 21, 1: 11, 2: 9, 3: 15}
        for z in dims.values():
            assert involution_p(21, z, 8).candidates == ()
        assert involution_p(21, 21, 8).central

    def test_roots_solve_the_equation(self):
        for g, z, n in [(8, 4, 5), (21, 11, 8), (85, 45, 16), (40, 20, 11)]:
            for p in involution_p(g, z, n).raw_roots:
                assert 3 * (g - z) == 2 * p * (n - p)

    def test_rejects_inconsistent_n(self):
        with pytest.raises(ValueError):
            involution_p(8, 4, 6)

    @pytest.mark.parametrize("family", ["G2", "F4", "E6", "E7", "E8", "SU", "SO", "Sp"])
    def test_property_holds(self, family):
        v = involution_property(family)
        assert v.holds, v.trace

    def test_g2_by_irrationality(self):
        assert any("43" in line for line in involution_property("G2").trace)

    def test_su3_rescued_by_minimal_dimension(self):
        v = involution_property("SU", m=3)
        assert v.holds
        assert any("minimum 6" in line for line in v.trace)

    def test_so_family_has_no_grassmannian_solution(self):
        for m in range(2, 13):
            g = m * (m - 1) // 2
            n = character_constraint(g)
            if n is None:
                continue
            p = 3 * m - 2 * n
            assert not (0 < p < m and p % 2 == 0)

    def test_unsupported_family(self):
        with pytest.raises(ValueError):
            involution_property("H3")


class TestEnumeration:
    def test_single_survivor(self):
        surv = survivors()
        assert [(c.t, c.k, c.g, c.n) for c in surv] == [(3, 2, 21, 8)]

    def test_every_trace_satisfies_the_character_identity(self):
        for c in enumerate_cases():
            assert c.n * c.n == 3 * Fraction(c.g) + 1
            assert c.n == 2 ** (c.t - 1) * c.k

    def test_visited_set_is_exactly_the_constrained_set(self):
        visited = {(c.t, c.k) for c in enumerate_cases() if c.rule != "dimension bound"}
        expected = set()
        for t in range(1, rank_bound() + 1):
            k = 1
            while Fraction(4 ** (t - 1) * k * k - 1, 3) <= 4 * t * t:
                expected.add((t, k))
                k += 1
        assert visited == expected

    def test_rank_bound(self):
        assert rank_bound() == 5
        t = rank_bound() + 1
        assert Fraction(4 ** (t - 1) - 1, 3) > 4 * t * t

    def test_exceptional_summand_trace(self):
        (c,) = [c for c in enumerate_cases() if (c.t, c.k) == (5, 1)]
        assert c.g == 85 and c.n == 16
        assert c.rule == "exceptional-summand contradiction"
        text = " ".join(c.subtraces)
        assert "dim g* = 71, rank 3" in text and "dim g* = 33, rank 1" in text
        assert all("violates" in s for s in c.subtraces)

    def test_rank_three_k_one_eliminated_by_rank(self):
        (c,) = [c for c in enumerate_cases() if (c.t, c.k) == (3, 1)]
        assert (c.g, c.n, c.rule) == (5, 4, "rank exceeds n/2")

    def test_no_survivor_for_t_1_2_4(self):
        for c in enumerate_cases():
            if c.t in (1, 2, 4):
                assert c.verdict == "eliminated"
                assert c.rule
