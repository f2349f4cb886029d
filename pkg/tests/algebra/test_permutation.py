"""Tests for permutations and set partitions."""

from __future__ import annotations

import unittest
from itertools import permutations, product

from tricacti.algebra import Permutation, SetPartition, compose, compose_all, count_cycles, cycle_partitions
from tricacti.utils.exception import DegreeMismatchError, PartitionError, PermutationError


class TestPermutation(unittest.TestCase):
    """Composition convention, cycles and validation."""

    def test_product_convention_gives_long_cycle(self: TestPermutation) -> None:
        """(1)(24)(3)(5) (1)(23)(45) (15) multiplies to (1 2 3 4 5), rightmost factor first."""
        alpha1 = Permutation.from_cycles(n=5, cycles=[(2, 4)])
        alpha2 = Permutation.from_cycles(n=5, cycles=[(2, 3), (4, 5)])
        alpha3 = Permutation.from_cycles(n=5, cycles=[(1, 5)])
        self.assertEqual(first=compose_all(alpha1, alpha2, alpha3), second=Permutation.long_cycle(5))  # noqa: PT009

    def test_compose_applies_right_factor_first(self: TestPermutation) -> None:
        """compose(p, q)(i) = p(q(i))."""
        p = Permutation(images=(2, 3, 1))
        q = Permutation(images=(1, 3, 2))
        self.assertEqual(first=compose(p, q).to_list(), second=[2, 1, 3])  # noqa: PT009
        self.assertEqual(first=(p * q)(2), second=p(q(2)))  # noqa: PT009

    def test_degree_mismatch(self: TestPermutation) -> None:
        """Composing different degrees raises."""
        with self.assertRaises(DegreeMismatchError) as context:  # noqa: PT027
            compose(Permutation.identity(2), Permutation.identity(3))
        self.assertIn(member="incompatible degrees", container=context.exception.message)  # noqa: PT009

    def test_rejects_non_bijection(self: TestPermutation) -> None:
        """Repeated images are refused."""
        with self.assertRaises(PermutationError):  # noqa: PT027
            Permutation(images=(1, 1, 2))

    def test_cycles_and_strings(self: TestPermutation) -> None:
        """Cycles start at their minimum and fixed points are kept."""
        perm = Permutation.from_cycles(n=5, cycles=[(4, 2)])
        self.assertEqual(first=perm.cycles(), second=((1,), (2, 4), (3,), (5,)))  # noqa: PT009
        self.assertEqual(first=perm.to_cycle_string(), second="(1)(2 4)(3)(5)")  # noqa: PT009
        self.assertEqual(first=perm.cycle_type(), second=(2, 1, 1, 1))  # noqa: PT009
        self.assertEqual(first=perm.cycle_count(), second=count_cycles(perm.images))  # noqa: PT009

    def test_inverse(self: TestPermutation) -> None:
        """p p^-1 is the identity."""
        perm = Permutation(images=(3, 1, 4, 2))
        self.assertTrue(expr=(perm * perm.inverse()).is_identity())  # noqa: PT009
        self.assertEqual(first=perm.image_of([1, 2]), second=frozenset({3, 1}))  # noqa: PT009

    def test_compose_is_associative(self: TestPermutation) -> None:
        """(pq)r = p(qr) for every triple in S3 and S4."""
        for n in (3, 4):
            group = [Permutation(images=images) for images in permutations(range(1, n + 1))]
            for p, q, r in product(group, repeat=3):
                self.assertEqual(first=compose(compose(p, q), r), second=compose(p, compose(q, r)))  # noqa: PT009

    def test_inverse_on_both_sides(self: TestPermutation) -> None:
        """p p^-1 = p^-1 p = id for all of S4, and inverting twice gives p back."""
        identity = Permutation.identity(4)
        for images in permutations(range(1, 5)):
            perm = Permutation(images=images)
            self.assertEqual(first=compose(perm, perm.inverse()), second=identity)  # noqa: PT009
            self.assertEqual(first=compose(perm.inverse(), perm), second=identity)  # noqa: PT009
            self.assertEqual(first=perm.inverse().inverse(), second=perm)  # noqa: PT009

    def test_cached_views_do_not_change_equality(self: TestPermutation) -> None:
        """Computing cycles and the inverse leaves a permutation equal to a fresh copy."""
        perm = Permutation(images=(3, 1, 4, 2))
        fresh = Permutation(images=(3, 1, 4, 2))
        self.assertEqual(first=perm.cycles(), second=((1, 3, 4, 2),))  # noqa: PT009
        self.assertIs(expr1=perm.inverse(), expr2=perm.inverse())  # noqa: PT009
        self.assertEqual(first=perm, second=fresh)  # noqa: PT009
        self.assertEqual(first=hash(perm), second=hash(fresh))  # noqa: PT009

    def test_empty_permutation(self: TestPermutation) -> None:
        """Degree 0 is allowed and has no cycles."""
        empty = Permutation(images=())
        self.assertEqual(first=empty.n, second=0)  # noqa: PT009
        self.assertEqual(first=empty.cycles(), second=())  # noqa: PT009


class TestSetPartition(unittest.TestCase):
    """Canonical form and cycle-stable partitions."""

    def test_canonical_order(self: TestSetPartition) -> None:
        """Blocks are sorted by minimum regardless of input order."""
        left = SetPartition.from_blocks(blocks=[(5, 4, 2), (3, 1)])
        right = SetPartition.from_blocks(blocks=[(1, 3), (2, 4, 5)])
        self.assertEqual(first=left, second=right)  # noqa: PT009
        self.assertEqual(first=left.to_list(), second=[[1, 3], [2, 4, 5]])  # noqa: PT009

    def test_block_map_locates_every_point(self: TestSetPartition) -> None:
        """Each point maps to the canonical position of its block."""
        partition = SetPartition.from_blocks(blocks=[(5, 4, 2), (3, 1)])
        self.assertEqual(first=partition.block_map(), second={1: 0, 3: 0, 2: 1, 4: 1, 5: 1})  # noqa: PT009
        self.assertFalse(expr=hasattr(partition, "block_containing"))  # noqa: PT009

    def test_rejects_overlap(self: TestSetPartition) -> None:
        """Blocks must cover 1..n exactly once."""
        with self.assertRaises(PartitionError):  # noqa: PT027
            SetPartition(n=3, blocks=((1, 2), (2, 3)))

    def test_straddling_cycle(self: TestSetPartition) -> None:
        """A cycle split across blocks is reported."""
        perm = Permutation.from_cycles(n=3, cycles=[(1, 2)])
        split = SetPartition.from_blocks(blocks=[(1, 3), (2,)])
        self.assertEqual(first=split.straddling_cycle(perm), second=(0, (1, 2)))  # noqa: PT009
        self.assertIsNone(obj=SetPartition.from_blocks(blocks=[(1, 2), (3,)]).straddling_cycle(perm))  # noqa: PT009

    def test_cycle_partitions_count_is_stirling(self: TestSetPartition) -> None:
        """Four cycles split into two blocks in S(4, 2) = 7 ways."""
        partitions = list(cycle_partitions(perm=Permutation.identity(4), blocks=2))
        self.assertEqual(first=len(partitions), second=7)  # noqa: PT009
        self.assertEqual(first=len(set(partitions)), second=7)  # noqa: PT009
        self.assertEqual(first=list(cycle_partitions(perm=Permutation.identity(2), blocks=3)), second=[])  # noqa: PT009


if __name__ == "__main__":
    unittest.main()
