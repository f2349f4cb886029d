"""Brute-force streams of factorizations and partitioned cacti."""

from __future__ import annotations

from itertools import permutations, product
from typing import TYPE_CHECKING

from tricacti.algebra import Permutation, SetPartition, cycle_partitions
from tricacti.utils import LOGGER
from tricacti.utils.limits import check_limit, enumeration_limit

from .partitioned import PartitionedCactus
from .triple import FactorTriple, make_factor_triple

if TYPE_CHECKING:
    from collections.abc import Iterator

PARALLEL_HINT: str = "pass --force (and --jobs J to split the work by alpha1(1))"


def alpha1_candidates(n: int, first: int | None = None) -> Iterator[tuple[int, ...]]:
    """One-line forms of alpha1 in lexicographic order, optionally restricted to alpha1(1) = first."""
    if first is None:
        yield from permutations(range(1, n + 1))
        return
    rest: list[int] = [value for value in range(1, n + 1) if value != first]
    for tail in permutations(rest):
        yield (first, *tail)


def enumerate_factorizations(n: int, *, first: int | None = None, force: bool = False) -> Iterator[FactorTriple]:
    """Yield all n!^2 factorizations in lexicographic order of (alpha1, alpha2).

    Args:
    ----
        n (int): Size.
        first (int | None): Restrict to alpha1(1) = first; the ranges for first = 1..n are contiguous
            and together cover the full stream.
        force (bool): Ignore the configured size limit.

    Raises:
    ------
        LimitExceededError: If ``n`` exceeds the limit without ``force``.

    """
    check_limit(value=n, limit=enumeration_limit(), what="n", force=force, hint=PARALLEL_HINT)
    alpha2_list: list[Permutation] = [Permutation(images=images) for images in permutations(range(1, n + 1))]
    for images in alpha1_candidates(n=n, first=first):
        alpha1 = Permutation(images=images)
        for alpha2 in alpha2_list:
            yield make_factor_triple(alpha1=alpha1, alpha2=alpha2)


def enumerate_cc(
    p1: int,
    p2: int,
    p3: int,
    n: int,
    *,
    first: int | None = None,
    force: bool = False,
) -> Iterator[PartitionedCactus]:
    """Yield every partitioned cactus with block counts (p1, p2, p3) on n points.

    For each factorization, each cycle set is partitioned into exactly p_i unordered blocks.
    ``first`` restricts the stream to alpha1(1) = first, as in ``enumerate_factorizations``.

    Raises
    ------
        LimitExceededError: If ``n`` exceeds the limit without ``force``.

    """
    check_limit(value=n, limit=enumeration_limit(), what="n", force=force, hint=PARALLEL_HINT)
    if min(p1, p2, p3) < 1 or max(p1, p2, p3) > n:
        LOGGER.debug("empty cactus class for p=(%d, %d, %d), n=%d", p1, p2, p3, n)
        return
    for triple in enumerate_factorizations(n=n, first=first, force=force):
        choices = (
            list(cycle_partitions(perm=triple.alpha1, blocks=p1)),
            list(cycle_partitions(perm=triple.alpha2, blocks=p2)),
            list(cycle_partitions(perm=triple.alpha3, blocks=p3)),
        )
        for pi1, pi2, pi3 in product(*choices):
            yield PartitionedCactus(alpha1=triple.alpha1, alpha2=triple.alpha2, pi1=pi1, pi2=pi2, pi3=pi3)


def _partitions_by_blocks(perm: Permutation) -> list[list[SetPartition]]:
    """Cycle partitions of ``perm`` grouped by block count 1..c(perm)."""
    return [list(cycle_partitions(perm=perm, blocks=blocks)) for blocks in range(1, perm.cycle_count() + 1)]


def enumerate_all_cc(n: int, *, first: int | None = None, force: bool = False) -> Iterator[PartitionedCactus]:
    """Yield partitioned cacti on n points for every block-count triple.

    The factorizations are generated once; each one yields its cacti grouped by (p1, p2, p3) in
    lexicographic order.
    """
    check_limit(value=n, limit=enumeration_limit(), what="n", force=force, hint=PARALLEL_HINT)
    for triple in enumerate_factorizations(n=n, first=first, force=force):
        whites = _partitions_by_blocks(triple.alpha1)
        blacks = _partitions_by_blocks(triple.alpha2)
        greys = _partitions_by_blocks(triple.alpha3)
        for list1, list2, list3 in product(whites, blacks, greys):
            for pi1, pi2, pi3 in product(list1, list2, list3):
                yield PartitionedCactus(alpha1=triple.alpha1, alpha2=triple.alpha2, pi1=pi1, pi2=pi2, pi3=pi3)
