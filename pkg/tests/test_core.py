"""Tests for the polynomial family, the coefficient triangle, and the
brute-force binomial sum that ties them together.

Frozen coefficient lists below are the published expansions for k = 1..6;
everything else is checked by independent routes (literal summation,
comb-based Catalan numbers, recurrence vs. closed form).
"""

from __future__ import annotations

from math import comb, factorial

import pytest

from tuenter.core import (
    apply_recursion,
    brute_sum,
    c2_closed,
    catalan_entry,
    coeff_closed,
    coeff_table,
    tuenter_poly,
    verify_sum_identity,
)
from tuenter.exact_poly import Poly, falling_factorial, to_falling_basis

X = Poly([0, 1])

# P_1..P_6 in ascending monomial coefficients
MONOMIAL_ROWS = {
    1: [0, 1],
    2: [0, -1, 2],
    3: [0, 3, -8, 6],
    4: [0, -17, 54, -60, 24],
    5: [0, 155, -556, 762, -480, 120],
    6: [0, -2073, 8146, -12840, 10248, -4200, 720],
}

# rows of c[j][k] for k = 1..6
FALLING_ROWS = {
    1: [1],
    2: [1, 2],
    3: [1, 10, 6],
    4: [1, 42, 84, 24],
    5: [1, 170, 882, 720, 120],
    6: [1, 682, 8448, 15048, 6600, 720],
}


class TestRecursionOperator:
    def test_on_constant(self):
        assert apply_recursion(Poly.one()) == X

    def test_on_linear(self):
        assert apply_recursion(X) == Poly([0, -1, 2])

    def test_on_falling_pair_in_falling_basis(self):
        got = to_falling_basis(apply_recursion(falling_factorial(2)))
        assert got == [0, 0, 4, 3]

    @pytest.mark.parametrize("j", range(13))
    def test_operator_law_on_falling_factorials(self, j):
        lhs = apply_recursion(falling_factorial(j))
        rhs = j * j * falling_factorial(j) + (j + 1) * falling_factorial(j + 1)
        assert lhs == rhs


class TestTuenterPoly:
    def test_initial(self):
        assert tuenter_poly(0) == Poly.one()

    @pytest.mark.parametrize("k", sorted(MONOMIAL_ROWS))
    def test_published_polynomials(self, k):
        assert list(tuenter_poly(k).coeffs) == MONOMIAL_ROWS[k]

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            tuenter_poly(-1)

    @pytest.mark.parametrize("k", range(21))
    def test_structure(self, k):
        p = tuenter_poly(k)
        assert p.degree == k
        assert p.leading_coefficient == factorial(k)
        assert p(1) == 1
        if k >= 1:
            assert p(0) == 0

    @pytest.mark.parametrize("k", range(1, 21))
    def test_falling_basis_matches_table(self, k):
        table = coeff_table(k)
        assert to_falling_basis(tuenter_poly(k)) == [0] + list(table.row(k).values)


class TestBruteSum:
    def test_cubic_case(self):
        assert brute_sum(3, 2) == 24
        assert 24 == 2 * 2 * comb(4, 2)

    def test_linear_case(self):
        assert brute_sum(1, 2) == 12

    def test_zero_exponent_convention(self):
        # |n-j|^0 = 1 at j = n, so S_0(n) = 2^(2n)
        assert brute_sum(0, 1) == 4
        assert brute_sum(0, 3) == 64

    def test_domain(self):
        with pytest.raises(ValueError):
            brute_sum(-1, 2)
        with pytest.raises(ValueError):
            brute_sum(3, 0)

    def test_one_sided_symmetry(self):
        for n in range(1, 12):
            for r in range(1, 8):
                folded = 2 * sum(comb(2 * n, j) * (n - j) ** r for j in range(n))
                assert brute_sum(r, n) == folded


class TestSumIdentity:
    def test_witness_fields(self):
        w = verify_sum_identity(1, 2)
        assert (w.r, w.n, w.lhs, w.rhs, w.match) == (3, 2, 24, 24, True)

    def test_quintic_case(self):
        w = verify_sum_identity(2, 2)
        assert w.lhs == w.rhs == 72

    def test_base_family_member(self):
        w = verify_sum_identity(0, 5)
        assert w.lhs == w.rhs == 5 * comb(10, 5) == 1260

    def test_sweep(self):
        for k in range(7):
            for n in range(1, 21):
                assert verify_sum_identity(k, n).match


class TestCatalanEntry:
    def test_interior_value(self):
        assert catalan_entry(4, 2) == 14

    @pytest.mark.parametrize("j", range(1, 11))
    def test_diagonal_is_one(self, j):
        assert catalan_entry(j, j) == 1

    def test_first_column_is_catalan_numbers(self):
        assert catalan_entry(6, 1) == 132
        for j in range(1, 21):
            assert catalan_entry(j, 1) == comb(2 * j, j) // (j + 1)

    def test_out_of_range(self):
        for j, q in ((0, 1), (3, 0), (3, 4), (-2, 1)):
            with pytest.raises(ValueError):
                catalan_entry(j, q)

    def test_column_recurrence_relation(self):
        for j in range(2, 41):
            for q in range(1, j):
                lhs = (j - q) * (j + q) * catalan_entry(j, q)
                rhs = (2 * j - 1) * (2 * j - 2) * catalan_entry(j - 1, q)
                assert lhs == rhs


class TestCoeffTable:
    def test_published_rows(self):
        table = coeff_table(6)
        for k, row in FALLING_ROWS.items():
            assert list(table.row(k).values) == row

    def test_row_one(self):
        assert list(coeff_table(1).row(1).values) == [1]

    def test_row_structure(self):
        table = coeff_table(20)
        for k in range(1, 21):
            row = table.row(k).values
            assert len(row) == k
            assert row[0] == 1
            assert row[-1] == factorial(k)
            assert all(c > 0 for c in row)

    def test_entry_accessor(self):
        table = coeff_table(6)
        assert table.entry(3, 6) == 8448
        with pytest.raises(ValueError):
            table.entry(7, 6)
        with pytest.raises(ValueError):
            table.entry(1, 7)

    def test_domain(self):
        with pytest.raises(ValueError):
            coeff_table(0)


class TestCoeffClosed:
    def test_small_diagonal(self):
        assert coeff_closed(3, 3) == 6

    def test_next_row(self):
        assert coeff_closed(3, 4) == 84

    def test_first_column(self):
        assert coeff_closed(1, 9) == 1

    def test_matches_recurrence(self):
        table = coeff_table(15)
        for k in range(1, 16):
            for j in range(1, k + 1):
                assert coeff_closed(j, k) == table.entry(j, k)

    def test_domain(self):
        for j, k in ((0, 3), (4, 3), (-1, 2)):
            with pytest.raises(ValueError):
                coeff_closed(j, k)


class TestC2Closed:
    @pytest.mark.parametrize(
        "k,expected", [(2, 2), (3, 10), (4, 42), (5, 170), (6, 682)]
    )
    def test_published_values(self, k, expected):
        assert c2_closed(k) == expected

    def test_matches_general_closed_form(self):
        for k in range(2, 31):
            assert c2_closed(k) == coeff_closed(2, k)

    def test_domain(self):
        with pytest.raises(ValueError):
            c2_closed(1)
