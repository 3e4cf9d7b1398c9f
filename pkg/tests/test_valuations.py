"""Valuation closed forms against exact valuations of the sequence engines,
plus the report/table serialization contracts."""

import pytest

from involution_lab.algebra import INFINITY, val2, val_p
from involution_lab.sequences import (
    involution_count,
    pth_root_count,
    signed_involution_count,
)
from involution_lab.valuations import (
    ValuationReport,
    binomial_shift_bound_holds,
    chi_even,
    chi_odd,
    even_involution_count,
    even_val2_predicted,
    format_valuation,
    involution_val2,
    odd_involution_count,
    odd_val2_predicted,
    signed_val2_predicted,
    table_fieldnames,
    table_row,
    tau_valuation_bound,
    valuation_report,
    valuation_table,
)


class TestBound:
    def test_examples(self):
        assert tau_valuation_bound(6, 3) == 2
        assert val_p(pth_root_count(6, 3), 3) == 4
        assert tau_valuation_bound(0, 2) == 0
        assert tau_valuation_bound(9, 3) == 2
        assert val_p(pth_root_count(9, 3), 3) == 2  # tight here

    @pytest.mark.parametrize("p", [2, 3, 5, 7])
    def test_bound_holds(self, p):
        for n in range(201):
            assert val_p(pth_root_count(n, p), p) >= tau_valuation_bound(n, p)


class TestCountValuation:
    def test_examples(self):
        assert involution_val2(7) == 3
        assert val2(involution_count(7)) == 3
        assert involution_val2(0) == 0
        assert involution_val2(10) == 3
        assert val2(involution_count(10)) == 3

    def test_closed_form_shapes_agree(self):
        for n in range(500):
            k, r = divmod(n, 4)
            assert involution_val2(n) == k + r // 2 + (1 if r == 3 else 0)

    def test_matches_exact(self):
        for n in range(501):
            assert val2(involution_count(n)) == involution_val2(n)


class TestShiftedBinomialBound:
    def test_examples(self):
        assert binomial_shift_bound_holds(4, 2)
        assert binomial_shift_bound_holds(1, 1)
        assert binomial_shift_bound_holds(6, 5)
        assert val2((1 << 5) * 6) == 6  # the i >= 5 specialization at k=6

    def test_range(self):
        for k in range(1, 257):
            for i in range(1, k + 1):
                assert binomial_shift_bound_holds(k, i)

    def test_domain(self):
        with pytest.raises(ValueError):
            binomial_shift_bound_holds(0, 1)
        with pytest.raises(ValueError):
            binomial_shift_bound_holds(3, 0)


class TestSignedValuation:
    def test_examples(self):
        assert signed_val2_predicted(10) == 6
        assert val2(signed_involution_count(10)) == 6
        assert signed_val2_predicted(2) is INFINITY
        assert signed_involution_count(2) == 0
        assert signed_val2_predicted(7) == 2
        assert val2(-20) == 2

    def test_matches_exact(self):
        for n in range(501):
            assert val2(signed_involution_count(n)) == signed_val2_predicted(n)


class TestParityCounts:
    def test_examples(self):
        assert (even_involution_count(4), odd_involution_count(4)) == (4, 6)
        assert (even_involution_count(0), odd_involution_count(0)) == (1, 0)
        assert odd_involution_count(9) == 1296

    def test_sum_and_difference(self):
        for n in range(401):
            e, o = even_involution_count(n), odd_involution_count(n)
            assert e + o == involution_count(n)
            assert e - o == signed_involution_count(n)


class TestParityValuations:
    def test_examples(self):
        assert even_val2_predicted(8) == 2
        assert val2(even_involution_count(8)) == 2
        assert odd_val2_predicted(9) == 4
        assert val2(odd_involution_count(9)) == 4
        assert even_val2_predicted(6) == 1 and odd_val2_predicted(6) == 1
        assert even_involution_count(6) == 46
        assert odd_involution_count(6) == 30

    def test_unknown_cells_are_none(self):
        assert odd_val2_predicted(8) is None  # n = 4k
        assert even_val2_predicted(9) is None  # n = 4k + 1

    def test_zero_cases_absorb(self):
        assert odd_val2_predicted(1) is INFINITY  # k = 0: no odd involutions
        assert val2(odd_involution_count(1)) is INFINITY

    def test_proven_cells_match(self):
        for k in range(121):
            assert val2(even_involution_count(4 * k)) == k + chi_odd(k)
            assert val2(odd_involution_count(4 * k + 1)) == k + val2(k) + chi_even(k)
            for r in (2, 3):
                n = 4 * k + r
                assert val2(even_involution_count(n)) == k
                assert val2(odd_involution_count(n)) == k


class TestReports:
    def test_report_matches_flag(self):
        rep = valuation_report(6, "t")
        assert rep == ValuationReport(6, "t", 2, 2, True)
        rep = valuation_report(0, "t_odd")
        assert rep.computed is INFINITY
        assert rep.predicted is None and not rep.matches

    def test_row_n6(self):
        row = table_row(6)
        assert (row["ord_t"], row["ord_t_signed"], row["ord_t_even"], row["ord_t_odd"]) == (
            "2",
            "4",
            "1",
            "1",
        )
        assert row["match_t"] == "true"

    def test_row_n0_and_n13(self):
        row = table_row(0)
        assert row["ord_t_odd"] == "inf"
        assert row["predicted_t_odd"] == "unknown"
        row = table_row(13)
        assert row["ord_t_even"] == "5"
        assert row["predicted_t_even"] == "unknown"

    def test_table_shape(self):
        reports = valuation_table(3)
        assert len(reports) == 16 * 4
        assert {rep.kind for rep in reports} == {"t", "t_signed", "t_even", "t_odd"}
        proven = [rep for rep in reports if rep.predicted is not None]
        assert all(rep.matches for rep in proven)

    def test_serialization(self):
        assert format_valuation(INFINITY) == "inf"
        assert format_valuation(None) == "unknown"
        assert format_valuation(17) == "17"
        assert set(table_row(5)) == set(table_fieldnames())
