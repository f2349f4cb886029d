"""Direct enumeration of the image set I(p1, p2, p3, n)."""

from __future__ import annotations

from itertools import combinations, permutations
from typing import TYPE_CHECKING

from tricacti.algebra import Permutation
from tricacti.tree import TreeProfile, enumerate_shapes, flag_assignments

from .image import ImageSizes, ImageTuple

if TYPE_CHECKING:
    from collections.abc import Iterator


def enumerate_image(p1: int, p2: int, p3: int, n: int) -> Iterator[ImageTuple]:
    """Yield every image tuple for block counts (p1, p2, p3) on n points.

    Trees come first, then S0, the free parts of S1 and S2 (n is always present), chi and the
    two permutations, each in lexicographic order.
    """
    if min(p1, p2, p3) < 1:
        return
    points: tuple[int, ...] = tuple(range(1, n + 1))
    for shape in enumerate_shapes(p1, p2, p3):
        for tree, (a, b, c) in flag_assignments(shape):
            sizes: ImageSizes = ImageSizes.of(pr=TreeProfile(p1, p2, p3, a, b, c), n=n)
            if not sizes.feasible(n):
                continue
            sigma1_list = [Permutation(images=images) for images in permutations(range(1, sizes.sigma1 + 1))]
            sigma2_list = [Permutation(images=images) for images in permutations(range(1, sizes.sigma2 + 1))]
            for s0 in combinations(points, sizes.s0):
                free: list[int] = [u for u in points if u not in s0]
                for head1 in combinations(points[:-1], sizes.s1 - 1):
                    for head2 in combinations(points[:-1], sizes.s2 - 1):
                        for chi in permutations(free, sizes.chi):
                            for sigma1 in sigma1_list:
                                for sigma2 in sigma2_list:
                                    yield ImageTuple(
                                        n=n,
                                        tree=tree,
                                        s0=s0,
                                        s1=(*head1, n),
                                        s2=(*head2, n),
                                        chi=chi,
                                        sigma1=sigma1,
                                        sigma2=sigma2,
                                    )
