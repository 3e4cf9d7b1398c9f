"""Sequence-engine tests: recurrences against each other, against the
enumeration oracles, and against the reference tables (with the two
misprinted reference cells pinned to their recurrence-confirmed values).
"""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from involution_lab.algebra import BivariatePoly, Dyadic, val2
from involution_lab.enumeration import graph_weight_sum_bruteforce, pth_roots
from involution_lab.reference_tables import CORRECTED_G_AT_ONE, G_AT_MINUS_ONE, G_AT_ONE
from involution_lab.sequences import (
    SequenceCache,
    graph_count,
    graph_count_signed,
    graph_poly,
    involution_count,
    involution_count_direct,
    involution_count_via_graphs,
    involution_poly,
    involution_poly_via_graphs,
    odd_factor,
    odd_factor_closed,
    odd_factor_step,
    pth_root_count,
    signed_involution_count,
)

T_PREFIX = [1, 1, 2, 4, 10, 26, 76, 232, 764, 2620, 9496, 35696, 140152, 568504]
SIGNED_PREFIX = [1, 1, 0, -2, -2, 6, 16, -20, -132, 28, 1216, 936, -12440, -23672]


class TestInvolutionCount:
    def test_prefix(self):
        assert [involution_count(n) for n in range(14)] == T_PREFIX

    def test_direct_examples(self):
        assert involution_count_direct(5) == 26
        assert involution_count_direct(1) == 1
        assert involution_count_direct(8) == 764

    def test_routes_agree(self):
        for n in range(201):
            assert involution_count_direct(n) == involution_count(n)
            assert involution_poly(n).evaluate(1, 1).as_int() == involution_count(n)

    def test_matches_enumeration(self):
        for n in range(9):
            assert involution_count(n) == len(pth_roots(n, 2))

    def test_signed_prefix(self):
        assert [signed_involution_count(n) for n in range(14)] == SIGNED_PREFIX

    def test_signed_matches_poly(self):
        for n in range(401):
            assert involution_poly(n).evaluate(1, -1).as_int() == signed_involution_count(n)


class TestPthRootCount:
    def test_examples(self):
        assert pth_root_count(6, 3) == 81
        assert pth_root_count(2, 5) == 1
        assert pth_root_count(9, 3) == 5769

    def test_reduces_to_involutions(self):
        for n in range(40):
            assert pth_root_count(n, 2) == involution_count(n)

    @pytest.mark.parametrize("p,n_max", [(2, 8), (3, 8), (5, 7), (7, 7)])
    def test_matches_enumeration(self, p, n_max):
        for n in range(n_max + 1):
            assert pth_root_count(n, p) == len(pth_roots(n, p))

    def test_nonprime_rejected(self):
        with pytest.raises(ValueError):
            pth_root_count(5, 6)


class TestInvolutionPoly:
    def test_small(self):
        x = BivariatePoly.monomial(1, 0)
        y = BivariatePoly.monomial(0, 1)
        assert involution_poly(0) == BivariatePoly.one()
        assert involution_poly(1) == x
        assert involution_poly(2) == x * x + y

    def test_eval_examples(self):
        assert involution_poly(4).evaluate(1, 1) == Dyadic(10)
        assert involution_poly(6).evaluate(1, -1) == Dyadic(16)

    def test_coefficient_law(self):
        for n in range(41):
            poly = involution_poly(n)
            assert len(poly) == n // 2 + 1
            for i in range(n // 2 + 1):
                j = n - 2 * i
                want = math.factorial(n) // ((1 << i) * math.factorial(i) * math.factorial(j))
                assert poly.coefficient(j, i) == want


class TestGraphPoly:
    def test_base_cases(self):
        assert graph_poly(0) == BivariatePoly.one()
        assert graph_poly(-3) == BivariatePoly.zero()
        assert graph_poly(1) == BivariatePoly.monomial(1, 0)

    def test_g4_by_hand(self):
        half = Dyadic(1, 1)
        blob = BivariatePoly({(2, 0): half, (0, 1): half})
        assert graph_poly(4) == blob * blob + BivariatePoly.monomial(2, 1)

    def test_matches_bruteforce(self):
        for n in range(11):
            assert graph_poly(n) == graph_weight_sum_bruteforce(n)

    def test_scalar_routes_match_poly_eval(self):
        for n in range(60):
            assert graph_poly(n).evaluate(1, 1).as_int() == graph_count(n)
            assert graph_poly(n).evaluate(1, -1).as_int() == graph_count_signed(n)


class TestGraphCounts:
    def test_reference_cells(self):
        assert graph_count(8) == 41
        assert graph_count_signed(12) == -140
        assert graph_count_signed(2) == 0
        assert graph_count_signed(20) == -44946
        assert graph_count_signed(21) == -2973086

    def test_reference_table_with_corrections(self):
        # The published count table is reproduced except at its two known
        # misprinted rows, which the recurrence (and the oracle) correct.
        for n, want in G_AT_ONE.items():
            got = graph_count(n)
            if n in CORRECTED_G_AT_ONE:
                assert got == CORRECTED_G_AT_ONE[n]
                assert got != want
            else:
                assert got == want
        for n, want in G_AT_MINUS_ONE.items():
            assert graph_count_signed(n) == want

    def test_misprinted_rows_are_the_shifted_values(self):
        # The reference's rows 20 and 21 hold the true n=21 and n=22 values.
        assert G_AT_ONE[20] == graph_count(21)
        assert G_AT_ONE[21] == graph_count(22)

    def test_odd_index_recurrence(self):
        for m in range(1, 201):
            assert graph_count(2 * m + 1) == graph_count(2 * m) + m * graph_count(2 * m - 1)


class TestGraphFormulas:
    def test_count_examples(self):
        assert involution_count_via_graphs(7) == 232
        assert involution_count_via_graphs(0) == 1
        assert involution_count_via_graphs(5) == 26

    def test_count_identity(self):
        for n in range(201):
            assert involution_count_via_graphs(n) == involution_count(n)

    def test_poly_examples(self):
        assert involution_poly_via_graphs(2) == involution_poly(2)
        assert involution_poly_via_graphs(0) == BivariatePoly.one()
        assert involution_poly_via_graphs(6).evaluate(1, -1) == Dyadic(16)

    def test_poly_identity_and_integrality(self):
        for n in range(41):
            via = involution_poly_via_graphs(n)
            assert via == involution_poly(n)
            assert via.is_integral


class TestOddFactor:
    def test_examples(self):
        assert odd_factor(7) == 29
        assert odd_factor(0) == 1
        assert odd_factor(11) == 2231

    def test_closed_examples(self):
        assert odd_factor_closed(7) == 29
        assert odd_factor_closed(4) == 5
        assert odd_factor_closed(10) == 1187

    def test_closed_matches(self):
        for n in range(201):
            assert odd_factor_closed(n) == odd_factor(n)

    def test_reconstruction(self):
        for n in range(401):
            assert odd_factor(n) << val2(involution_count(n)) == involution_count(n)

    def test_step_examples(self):
        assert odd_factor_step(4, 1, 5) == 13
        assert odd_factor_step(5, 5, 13) == 19
        assert odd_factor_step(2, 1, 1) == 1

    def test_step_drives_the_sequence(self):
        prev, curr = odd_factor(0), odd_factor(1)
        for n in range(1, 201):
            nxt = odd_factor_step(n, prev, curr)
            assert nxt == odd_factor(n + 1)
            prev, curr = curr, nxt

    def test_step_rejects_fake_inputs(self):
        with pytest.raises(ValueError):
            odd_factor_step(5, 4, 13)  # beta(4) is 5, not 4
        with pytest.raises(ValueError):
            odd_factor_step(0, 1, 1)


class TestSequenceCache:
    def test_prefix_consistency(self):
        cache = SequenceCache(lambda n, v: 1 if n < 2 else v[n - 1] + (n - 1) * v[n - 2])
        assert cache.get(10) == 9496
        assert cache.selftest(30)
        assert cache.prefix(5) == [1, 1, 2, 4, 10, 26]

    def test_negative_index_rejected(self):
        cache = SequenceCache(lambda n, v: n)
        with pytest.raises(ValueError):
            cache.get(-1)

    @given(st.integers(min_value=0, max_value=300))
    @settings(max_examples=30, deadline=None)
    def test_count_prefix_consistency_sampled(self, n):
        assert involution_count_direct(n) == involution_count(n)
