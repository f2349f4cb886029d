"""Worked examples shared by the test modules."""

from __future__ import annotations

from tricacti.algebra import Permutation, SetPartition
from tricacti.bijection import ImageTuple
from tricacti.cactus import FactorTriple, PartitionedCactus, make_factor_triple
from tricacti.tree import CactusTree, Color


def triple_genus0() -> FactorTriple:
    """(1)(24)(3)(5) * (1)(23)(45) * (15) on five points."""
    return make_factor_triple(
        alpha1=Permutation.from_cycles(n=5, cycles=[(2, 4)]),
        alpha2=Permutation.from_cycles(n=5, cycles=[(2, 3), (4, 5)]),
    )


def triple_two_points() -> FactorTriple:
    """(12)^3 = (12) on two points."""
    swap = Permutation.from_cycles(n=2, cycles=[(1, 2)])
    return make_factor_triple(alpha1=swap, alpha2=swap)


def triple_genus1() -> FactorTriple:
    """(13) * (14)(23) * (13)(24) on four points."""
    return make_factor_triple(
        alpha1=Permutation.from_cycles(n=4, cycles=[(1, 3)]),
        alpha2=Permutation.from_cycles(n=4, cycles=[(1, 4), (2, 3)]),
    )


def cactus_five() -> PartitionedCactus:
    """The genus 0 factorization with pi1 = {245, 13}, pi2 = {123, 45}, pi3 = {3, 1245}."""
    triple: FactorTriple = triple_genus0()
    return PartitionedCactus(
        alpha1=triple.alpha1,
        alpha2=triple.alpha2,
        pi1=SetPartition.from_blocks(blocks=[(2, 4, 5), (1, 3)]),
        pi2=SetPartition.from_blocks(blocks=[(1, 2, 3), (4, 5)]),
        pi3=SetPartition.from_blocks(blocks=[(3,), (1, 2, 4, 5)]),
    )


def tree_five() -> CactusTree:
    """Cactus tree of ``cactus_five``."""
    black_leaf = CactusTree(color=Color.BLACK)
    white = CactusTree(color=Color.WHITE, children=(black_leaf,), flag=True)
    grey_right = CactusTree(color=Color.GREY, children=(white,))
    grey_left = CactusTree(color=Color.GREY)
    black = CactusTree(color=Color.BLACK, children=(grey_left, grey_right), flag=True)
    return CactusTree(color=Color.WHITE, children=(black,))


def image_five() -> ImageTuple:
    """Image tuple of ``cactus_five``."""
    return ImageTuple(
        n=5,
        tree=tree_five(),
        s0=(3, 4),
        s1=(1, 2, 5),
        s2=(2, 3, 5),
        chi=(5,),
        sigma1=Permutation(images=(1, 2)),
        sigma2=Permutation(images=(2, 1)),
    )


def tree_chain() -> CactusTree:
    """Path W - B - G - W - B - G with the second white flagged."""
    grey_leaf = CactusTree(color=Color.GREY)
    black_low = CactusTree(color=Color.BLACK, children=(grey_leaf,))
    white = CactusTree(color=Color.WHITE, children=(black_low,), flag=True)
    grey = CactusTree(color=Color.GREY, children=(white,))
    black = CactusTree(color=Color.BLACK, children=(grey,))
    return CactusTree(color=Color.WHITE, children=(black,))


def image_four() -> ImageTuple:
    """Tuple on four points whose cactus has genus 1."""
    return ImageTuple(
        n=4,
        tree=tree_chain(),
        s0=(1, 4),
        s1=(2, 3, 4),
        s2=(1, 2, 3, 4),
        chi=(2, 3),
        sigma1=Permutation(images=(1,)),
        sigma2=Permutation(images=()),
    )


def cactus_four() -> PartitionedCactus:
    """Cactus rebuilt from ``image_four``."""
    triple: FactorTriple = triple_genus1()
    return PartitionedCactus(
        alpha1=triple.alpha1,
        alpha2=triple.alpha2,
        pi1=SetPartition.from_blocks(blocks=[(4,), (1, 2, 3)]),
        pi2=SetPartition.from_blocks(blocks=[(1, 4), (2, 3)]),
        pi3=SetPartition.from_blocks(blocks=[(1, 3), (2, 4)]),
    )


def image_one() -> ImageTuple:
    """The unique tuple on one point: W - B - G with the black flagged."""
    grey = CactusTree(color=Color.GREY)
    black = CactusTree(color=Color.BLACK, children=(grey,), flag=True)
    return ImageTuple(
        n=1,
        tree=CactusTree(color=Color.WHITE, children=(black,)),
        s0=(1,),
        s1=(1,),
        s2=(1,),
        chi=(),
        sigma1=Permutation(images=()),
        sigma2=Permutation(images=()),
    )
