"""Tests for cactus trees: validation, enumeration, closed form and generating function."""

from __future__ import annotations

import unittest
from collections import Counter

from tests.fixtures import tree_chain, tree_five
from tricacti.tree import (
    CactusTree,
    Color,
    TreeProfile,
    ct_count_formula,
    enumerate_ct,
    enumerate_shapes,
    flag_assignments,
    gf_coefficients,
    profile,
    validate_tree,
)
from tricacti.utils.exception import LimitExceededError, SeriesError, TricactiError


class TestCactusTree(unittest.TestCase):
    """Colouring and flag rules."""

    def test_profiles(self: TestCactusTree) -> None:
        """Vertex and flag counts of the fixture trees."""
        self.assertEqual(first=profile(tree_five()), second=TreeProfile(2, 2, 2, 1, 1, 0))  # noqa: PT009
        self.assertEqual(first=profile(tree_chain()), second=TreeProfile(2, 2, 2, 1, 0, 0))  # noqa: PT009
        self.assertIsNone(obj=validate_tree(tree_five()))  # noqa: PT009

    def test_root_rules(self: TestCactusTree) -> None:
        """The root is white and never flagged."""
        grey_root = CactusTree(color=Color.GREY)
        self.assertEqual(first=validate_tree(grey_root).message, second="the root must be white")  # noqa: PT009
        flagged = CactusTree(color=Color.WHITE, children=(CactusTree(color=Color.BLACK),), flag=True)
        self.assertEqual(first=validate_tree(flagged).path, second=[])  # noqa: PT009

    def test_colour_sequence(self: TestCactusTree) -> None:
        """A white child under a white vertex is reported at its path."""
        tree = CactusTree(color=Color.WHITE, children=(CactusTree(color=Color.WHITE),))
        self.assertEqual(first=validate_tree(tree).path, second=[0])  # noqa: PT009

    def test_no_shared_edge(self: TestCactusTree) -> None:
        """A flagged vertex's rightmost child cannot be flagged too."""
        grey = CactusTree(color=Color.GREY, children=(CactusTree(color=Color.WHITE),), flag=True)
        black = CactusTree(color=Color.BLACK, children=(grey,), flag=True)
        tree = CactusTree(color=Color.WHITE, children=(black,))
        self.assertEqual(first=validate_tree(tree).path, second=[0, 0])  # noqa: PT009

    def test_leaf_flag(self: TestCactusTree) -> None:
        """A flag needs a child to close the triangle."""
        tree = CactusTree(color=Color.WHITE, children=(CactusTree(color=Color.BLACK, flag=True),))
        self.assertEqual(first=validate_tree(tree).message, second="flagged vertex without children")  # noqa: PT009


class TestTreeCounts(unittest.TestCase):
    """Enumeration against the closed form and the generating function."""

    def test_small_counts(self: TestTreeCounts) -> None:
        """Hand-counted profiles."""
        expected: dict[TreeProfile, int] = {
            TreeProfile(1, 1, 1, 0, 0, 0): 1,
            TreeProfile(1, 1, 1, 0, 1, 0): 1,
            TreeProfile(2, 1, 1, 1, 0, 0): 0,
            TreeProfile(2, 1, 1, 0, 0, 1): 1,
            TreeProfile(2, 1, 1, 0, 1, 1): 0,
            TreeProfile(2, 1, 1, 0, 0, 0): 1,
        }
        for pr, count in expected.items():
            self.assertEqual(first=ct_count_formula(pr), second=count, msg=str(pr))  # noqa: PT009
            self.assertEqual(first=sum(1 for _ in enumerate_ct(pr)), second=count, msg=str(pr))  # noqa: PT009

    def test_star(self: TestTreeCounts) -> None:
        """A white root with k black leaves is the only tree of profile (1, k, 0)."""
        for k in range(4):
            self.assertEqual(first=sum(1 for _ in enumerate_ct(TreeProfile(1, k, 0))), second=1)  # noqa: PT009

    def test_formula_needs_all_colours(self: TestTreeCounts) -> None:
        """The closed form is stated for p_i >= 1."""
        with self.assertRaises(TricactiError):  # noqa: PT027
            ct_count_formula(TreeProfile(1, 2, 0))

    def test_formula_matches_enumeration(self: TestTreeCounts) -> None:
        """Every profile with p1 + p2 + p3 <= 6 and a, b, c <= 2."""
        for p1 in range(1, 5):
            for p2 in range(1, 6 - p1):
                for p3 in range(1, 7 - p1 - p2):
                    for a in range(3):
                        for b in range(3):
                            for c in range(3):
                                pr = TreeProfile(p1, p2, p3, a, b, c)
                                brute: int = sum(1 for _ in enumerate_ct(pr))
                                self.assertEqual(first=ct_count_formula(pr), second=brute, msg=str(pr))  # noqa: PT009

    def test_generating_function(self: TestTreeCounts) -> None:
        """Coefficients of W agree with enumeration up to five vertices."""
        series: dict[TreeProfile, int] = gf_coefficients(max_vertices=5)
        self.assertEqual(first=series[TreeProfile(1, 0, 0)], second=1)  # noqa: PT009
        self.assertEqual(first=series[TreeProfile(1, 1, 0)], second=1)  # noqa: PT009
        self.assertEqual(first=series[TreeProfile(1, 1, 1, 0, 1, 0)], second=1)  # noqa: PT009
        for pr, count in series.items():
            self.assertEqual(first=sum(1 for _ in enumerate_ct(pr)), second=count, msg=str(pr))  # noqa: PT009
        total_shapes: int = sum(
            len(enumerate_shapes(p1, p2, 5 - p1 - p2)) for p1 in range(1, 6) for p2 in range(6 - p1)
        )
        with_five: int = sum(count for pr, count in series.items() if pr.vertices == 5 and not (pr.a or pr.b or pr.c))
        self.assertEqual(first=with_five, second=total_shapes)  # noqa: PT009

    def test_counts_up_to_seven_vertices(self: TestTreeCounts) -> None:
        """Closed form against enumeration up to seven vertices, the series against enumeration up to six."""
        by_profile: Counter[TreeProfile] = Counter()
        for total in range(1, 8):
            for p1 in range(1, total + 1):
                for p2 in range(total - p1 + 1):
                    for shape in enumerate_shapes(p1, p2, total - p1 - p2):
                        for _, (a, b, c) in flag_assignments(shape):
                            by_profile[TreeProfile(p1, p2, total - p1 - p2, a, b, c)] += 1
        for pr, count in by_profile.items():
            if min(pr.p1, pr.p2, pr.p3) >= 1:
                self.assertEqual(first=ct_count_formula(pr), second=count, msg=str(pr))  # noqa: PT009
        series: dict[TreeProfile, int] = gf_coefficients(max_vertices=6)
        small: dict[TreeProfile, int] = {pr: count for pr, count in by_profile.items() if pr.vertices <= 6}
        self.assertEqual(first=series, second=small)  # noqa: PT009

    def test_limits(self: TestTreeCounts) -> None:
        """Tree enumeration and the series budget are bounded by configuration."""
        with self.assertRaises(LimitExceededError):  # noqa: PT027
            next(enumerate_ct(TreeProfile(5, 4, 4)))
        with self.assertRaises(SeriesError):  # noqa: PT027
            gf_coefficients(max_vertices=50)


if __name__ == "__main__":
    unittest.main()
