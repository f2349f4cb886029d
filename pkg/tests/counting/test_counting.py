"""Tests for the factorization table and the closed-form class sizes."""

from __future__ import annotations

import os
import unittest
from math import factorial
from unittest import mock

from sympy.polys.domains import QQ

from tricacti.cactus import enumerate_cc
from tricacti.counting import (
    X1,
    X2,
    X3,
    MTable,
    cc_count_stirling,
    genus_distribution,
    i_count_formula,
    i_count_from_trees,
    jackson_symmetric,
    m_bruteforce,
    m_from_factorizations,
    theorem1_check,
)
from tricacti.utils import LIMITS_CFG
from tricacti.utils.exception import InputFormatError, LimitExceededError, TricactiError
from tricacti.utils.limits import progress_enabled


class TestMTable(unittest.TestCase):
    """Brute-force counts by cycle type."""

    def test_two_points(self: TestMTable) -> None:
        """Three genus 0 factorizations and (12)^3."""
        table: MTable = m_bruteforce(n=2)
        self.assertEqual(  # noqa: PT009
            first=table.counts,
            second={(1, 1, 1): 1, (1, 2, 2): 1, (2, 1, 2): 1, (2, 2, 1): 1},
        )
        self.assertEqual(first=table[(2, 2, 2)], second=0)  # noqa: PT009
        self.assertEqual(first=genus_distribution(table), second={0: 3, 1: 1})  # noqa: PT009

    def test_totals_and_symmetry(self: TestMTable) -> None:
        """Entries add up to n!^2 and do not depend on the order of the factors."""
        for n, total in ((1, 1), (3, 36), (4, 576)):
            table: MTable = m_bruteforce(n=n)
            self.assertEqual(first=table.total(), second=total)  # noqa: PT009
            self.assertTrue(expr=table.is_symmetric())  # noqa: PT009

    def test_totals_and_genera_up_to_five(self: TestMTable) -> None:
        """For n <= 5 the table sums to n!^2 and every entry has a natural genus."""
        for n in range(1, 6):
            table: MTable = m_bruteforce(n=n)
            self.assertEqual(first=table.total(), second=factorial(n) ** 2)  # noqa: PT009
            self.assertEqual(first=sum(genus_distribution(table).values()), second=factorial(n) ** 2)  # noqa: PT009
            self.assertTrue(expr=all(g >= 0 for g in genus_distribution(table)))  # noqa: PT009

    def test_progress_bar_follows_verbose(self: TestMTable) -> None:
        """The progress bar is shown only for large tables and never when VERBOSE is off."""
        bar = mock.MagicMock(side_effect=lambda iterable, **_: iterable)
        with mock.patch.dict(LIMITS_CFG.progress, {"min_total": 1}), mock.patch("tricacti.counting.mtable.tqdm", bar):
            for verbose in (True, False):
                with mock.patch("tricacti.utils.limits.VERBOSE", verbose):
                    m_bruteforce(n=2)
                self.assertEqual(first=bar.call_args.kwargs["disable"], second=not verbose)  # noqa: PT009
        with mock.patch("tricacti.utils.limits.VERBOSE", True):
            self.assertFalse(expr=progress_enabled(total=int(LIMITS_CFG.progress["min_total"]) - 1))  # noqa: PT009

    def test_reference_paths_agree(self: TestMTable) -> None:
        """Raw counting, object enumeration and the process pool give one table."""
        table: MTable = m_bruteforce(n=3)
        self.assertEqual(first=m_from_factorizations(n=3), second=table)  # noqa: PT009
        self.assertEqual(first=m_bruteforce(n=3, jobs=2), second=table)  # noqa: PT009

    def test_csv(self: TestMTable) -> None:
        """Rows are sorted under a fixed header and parse back."""
        table: MTable = m_bruteforce(n=2)
        text: str = table.to_csv()
        self.assertEqual(  # noqa: PT009
            first=text,
            second="n1,n2,n3,count\n1,1,1,1\n1,2,2,1\n2,1,2,1\n2,2,1,1\n",
        )
        self.assertEqual(first=MTable.from_csv(n=2, text=text), second=table)  # noqa: PT009
        self.assertEqual(  # noqa: PT009
            first=table.to_json(),
            second='{"n":2,"rows":[[1,1,1,1],[1,2,2,1],[2,1,2,1],[2,2,1,1]]}',
        )
        with self.assertRaises(InputFormatError):  # noqa: PT027
            MTable.from_csv(n=2, text="n1,n2,count\n1,1,1\n")

    def test_limit(self: TestMTable) -> None:
        """The environment variable lowers the brute-force limit."""
        with mock.patch.dict(os.environ, {"CACTUS3_MAX_N": "2"}):
            with self.assertRaises(LimitExceededError):  # noqa: PT027
                m_bruteforce(n=3)
            self.assertEqual(first=m_bruteforce(n=3, force=True).total(), second=36)  # noqa: PT009


class TestFormulas(unittest.TestCase):
    """Closed forms against each other and against enumeration."""

    def test_known_values(self: TestFormulas) -> None:
        """(1, 1, 1, n) gives n!^2; (2, 2, 2, 5) gives 108000."""
        self.assertEqual(first=i_count_formula(1, 1, 1, 4), second=576)  # noqa: PT009
        self.assertEqual(first=i_count_formula(2, 2, 2, 5), second=108000)  # noqa: PT009
        with self.assertRaises(TricactiError):  # noqa: PT027
            i_count_formula(0, 1, 1, 2)

    def test_three_routes(self: TestFormulas) -> None:
        """The closed form, its symmetric version and the sum over trees agree for n <= 5."""
        for n in range(1, 6):
            for p1 in range(1, n + 1):
                for p2 in range(1, n + 1):
                    for p3 in range(1, n + 1):
                        expected: int = i_count_formula(p1, p2, p3, n)
                        label: str = f"p={(p1, p2, p3)} n={n}"
                        self.assertEqual(first=jackson_symmetric(p1, p2, p3, n), second=expected, msg=label)  # noqa: PT009
                        self.assertEqual(first=jackson_symmetric(p3, p1, p2, n), second=expected, msg=label)  # noqa: PT009
                        self.assertEqual(first=i_count_from_trees(p1, p2, p3, n), second=expected, msg=label)  # noqa: PT009

    def test_class_sizes(self: TestFormulas) -> None:
        """Stirling-weighted table sums count the enumerated cacti for n <= 3."""
        for n in range(1, 4):
            table: MTable = m_bruteforce(n=n)
            for p1 in range(1, n + 1):
                for p2 in range(1, n + 1):
                    for p3 in range(1, n + 1):
                        brute: int = sum(1 for _ in enumerate_cc(p1, p2, p3, n))
                        self.assertEqual(first=cc_count_stirling(p1, p2, p3, n, table=table), second=brute)  # noqa: PT009
                        self.assertEqual(first=i_count_formula(p1, p2, p3, n), second=brute)  # noqa: PT009


class TestTheorem(unittest.TestCase):
    """Polynomial identity against brute force."""

    def test_two_points(self: TestTheorem) -> None:
        """Left side for n = 2 is read straight off the table."""
        check = theorem1_check(n=2)
        expected = (X1**2 * X2**2 * X3 + X1**2 * X2 * X3**2 + X1 * X2**2 * X3**2 + X1 * X2 * X3) * QQ(1, 4)
        self.assertEqual(first=check.lhs, second=expected)  # noqa: PT009
        self.assertTrue(expr=check.passed)  # noqa: PT009
        self.assertEqual(first=check.mismatches(), second=[])  # noqa: PT009

    def test_small_sizes(self: TestTheorem) -> None:
        """Identity and bridge hold for n <= 4."""
        for n in range(1, 5):
            self.assertTrue(expr=theorem1_check(n=n).passed, msg=f"n={n}")  # noqa: PT009


if __name__ == "__main__":
    unittest.main()
