"""Tests for truncated multivariate series."""

from __future__ import annotations

import unittest
from fractions import Fraction

from tricacti.algebra import TruncatedSeries, Truncation, reciprocal
from tricacti.utils.exception import SeriesError


class TestTruncatedSeries(unittest.TestCase):
    """Arithmetic under per-variable and weighted caps."""

    def setUp(self: TestTruncatedSeries) -> None:
        """Two variables capped at degree 3 each."""
        self.truncation = Truncation(caps=(3, 3))
        self.x = TruncatedSeries.variable(truncation=self.truncation, index=0)
        self.y = TruncatedSeries.variable(truncation=self.truncation, index=1)

    def test_product_drops_terms_beyond_caps(self: TestTruncatedSeries) -> None:
        """x^2 * x^2 vanishes when x is capped at 3."""
        square = self.x * self.x
        self.assertTrue(expr=(square * square).is_zero())  # noqa: PT009
        self.assertEqual(first=(self.x * self.y)[(1, 1)], second=Fraction(1))  # noqa: PT009

    def test_geometric_reciprocal(self: TestTruncatedSeries) -> None:
        """1 / (1 - x) = 1 + x + x^2 + x^3 up to the cap."""
        inverse = reciprocal(1 - self.x)
        for power in range(4):
            self.assertEqual(first=inverse[(power, 0)], second=Fraction(1))  # noqa: PT009
        self.assertEqual(first=(inverse * (1 - self.x)), second=TruncatedSeries.constant(self.truncation, 1))  # noqa: PT009

    def test_reciprocal_of_one_plus_two_x_plus_three_x_squared(self: TestTruncatedSeries) -> None:
        """s * (1 / s) = 1 for s = 1 + 2x + 3x^2 with x capped at 4."""
        truncation = Truncation(caps=(4,))
        s = TruncatedSeries.from_terms(truncation=truncation, terms={(0,): 1, (1,): 2, (2,): 3})
        inverse = s.reciprocal()
        self.assertEqual(first=s * inverse, second=TruncatedSeries.constant(truncation, 1))  # noqa: PT009
        self.assertEqual(  # noqa: PT009
            first=[inverse[(power,)] for power in range(5)],
            second=[Fraction(1), Fraction(-2), Fraction(1), Fraction(4), Fraction(-11)],
        )

    def test_reciprocal_is_a_two_sided_inverse(self: TestTruncatedSeries) -> None:
        """Several series with non-unit constant terms, one and two variables, caps up to 8."""
        cases = [
            (Truncation(caps=(8,)), {(0,): 2, (1,): -1, (3,): 5, (7,): 1}),
            (Truncation(caps=(6,)), {(0,): Fraction(-3, 2), (2,): Fraction(1, 3), (5,): 4}),
            (Truncation(caps=(3, 4)), {(0, 0): 1, (1, 0): 1, (0, 1): -2, (1, 1): 3, (2, 3): 7}),
            (Truncation(caps=(5, 5), weights=(1, 1), degree_cap=6), {(0, 0): -1, (1, 2): 2, (0, 1): 1}),
        ]
        for truncation, terms in cases:
            s = TruncatedSeries.from_terms(truncation=truncation, terms=terms)
            one = TruncatedSeries.constant(truncation, 1)
            self.assertEqual(first=s * reciprocal(s), second=one)  # noqa: PT009
            self.assertEqual(first=reciprocal(s) * s, second=one)  # noqa: PT009
            self.assertEqual(first=reciprocal(reciprocal(s)), second=s)  # noqa: PT009

    def test_reciprocal_needs_constant_term(self: TestTruncatedSeries) -> None:
        """A series without constant term is not invertible."""
        with self.assertRaises(SeriesError):  # noqa: PT027
            reciprocal(self.x)

    def test_cap_mismatch(self: TestTruncatedSeries) -> None:
        """Operands must share one truncation."""
        other = TruncatedSeries.variable(truncation=Truncation(caps=(2, 2)), index=0)
        with self.assertRaises(SeriesError):  # noqa: PT027
            _ = self.x + other

    def test_weighted_degree_cap(self: TestTruncatedSeries) -> None:
        """With weights (1, 0) and degree cap 1, y survives but x^2 does not."""
        truncation = Truncation(caps=(3, 3), weights=(1, 0), degree_cap=1)
        x = TruncatedSeries.variable(truncation=truncation, index=0)
        y = TruncatedSeries.variable(truncation=truncation, index=1)
        self.assertTrue(expr=(x * x).is_zero())  # noqa: PT009
        self.assertEqual(first=(x * y * y)[(1, 2)], second=Fraction(1))  # noqa: PT009


if __name__ == "__main__":
    unittest.main()
