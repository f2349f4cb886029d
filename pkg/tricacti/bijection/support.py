"""Support sets, the sequence chi, and the partial permutations sigma1, sigma2."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from tricacti.algebra import Permutation, compose_all
from tricacti.cactus import MarkerSet, PartitionedCactus, block_markers
from tricacti.utils.exception import InvariantViolationError

if TYPE_CHECKING:
    from .relabel import Relabeling


@dataclass(frozen=True)
class MarkerImages:
    """Marker values read through the relabelling permutations, indexed by new block labels.

    Attributes
    ----------
        white (tuple[int, ...]): lambda1(m1) for every white block; the root's entry is n.
        black (tuple[int, ...]): lambda1(a2 a3 (m2')) for every black block.
        grey (tuple[int, ...]): lambda1(a3 (m3)) for every grey block.
        grey_own (tuple[int, ...]): lambda3(m3).
        white_in_grey (tuple[int, ...]): lambda3(a3^-1 (m1)) for non-root whites.
        black_own (tuple[int, ...]): lambda2(m2').
        grey_in_black (tuple[int, ...]): lambda2(a3^-1 a2^-1 a3 (m3)).

    """

    white: tuple[int, ...]
    black: tuple[int, ...]
    grey: tuple[int, ...]
    grey_own: tuple[int, ...]
    white_in_grey: tuple[int, ...]
    black_own: tuple[int, ...]
    grey_in_black: tuple[int, ...]


@dataclass(frozen=True)
class SupportSets:
    """S0, S1, S2 as ascending tuples and chi in grey label order."""

    s0: tuple[int, ...]
    s1: tuple[int, ...]
    s2: tuple[int, ...]
    chi: tuple[int, ...]


@dataclass(frozen=True)
class ForwardTrace:
    """Intermediate objects of the sigma construction."""

    markers: MarkerSet
    images: MarkerImages
    e1: tuple[int, ...]
    e2: tuple[int, ...]
    rho1: dict[int, int]
    rho2: dict[int, int]
    rho3: dict[int, int]
    rho4: dict[int, int]
    sigma1_partial: dict[int, int]
    sigma2_partial: dict[int, int]
    sigma1_bar: Permutation
    sigma2_bar: Permutation


def relabeled_markers(pc: PartitionedCactus, relabeling: Relabeling) -> MarkerSet:
    """Markers of ``pc`` with blocks in reverse-label order."""
    return block_markers(pc=pc, white=relabeling.white, black=relabeling.black, grey=relabeling.grey)


def marker_images(pc: PartitionedCactus, relabeling: Relabeling, mk: MarkerSet) -> MarkerImages:
    """Read every marker through the relabelling permutations."""
    lambda1, lambda2, lambda3 = relabeling.lambda1, relabeling.lambda2, relabeling.lambda3
    inverse2, inverse3 = pc.alpha2.inverse(), pc.alpha3.inverse()
    return MarkerImages(
        white=tuple(lambda1(value) for value in mk.m1),
        black=tuple(lambda1(value) for value in mk.black_last),
        grey=tuple(lambda1(value) for value in mk.grey_last),
        grey_own=tuple(lambda3(value) for value in mk.m3),
        white_in_grey=tuple(lambda3(inverse3(value)) for value in mk.m1[:-1]),
        black_own=tuple(lambda2(value) for value in mk.m2p),
        grey_in_black=tuple(lambda2(inverse3(inverse2(value))) for value in mk.grey_last),
    )


def support_sets(pc: PartitionedCactus, relabeling: Relabeling, mk: MarkerSet | None = None) -> SupportSets:
    """Build S0, S1, S2 and chi.

    S0 holds lambda1 of the non-root white markers and of the black last-passage triangles;
    S1 holds lambda3 of the grey markers and of a3^-1 (m1) for non-root whites; S2 holds lambda2
    of the black markers and of a3^-1 a2^-1 a3 (m3). chi lists lambda1(a3 (m3)) in grey label
    order, skipping values already recorded in S0.
    """
    mk = relabeled_markers(pc=pc, relabeling=relabeling) if mk is None else mk
    images: MarkerImages = marker_images(pc=pc, relabeling=relabeling, mk=mk)
    s0: set[int] = set(images.white[:-1]) | set(images.black)
    s1: set[int] = set(images.grey_own) | set(images.white_in_grey)
    s2: set[int] = set(images.black_own) | set(images.grey_in_black)
    chi: tuple[int, ...] = tuple(value for value in images.grey if value not in s0)
    return SupportSets(s0=tuple(sorted(s0)), s1=tuple(sorted(s1)), s2=tuple(sorted(s2)), chi=chi)


def _ranks(values: tuple[int, ...]) -> dict[int, int]:
    return {value: rank for rank, value in enumerate(values, start=1)}


def sigma_permutations(
    pc: PartitionedCactus,
    relabeling: Relabeling,
    mk: MarkerSet | None = None,
) -> tuple[Permutation, Permutation, ForwardTrace]:
    """Restrict the conjugated factors to the non-marker points and standardize them.

    sigma1 is lambda3 a3^-1 lambda1^-1 on E1 and sigma2 is lambda2 a3^-1 a2^-1 lambda1^-1 on E2,
    both rewritten on ranks 1..k of domain and range.

    Raises
    ------
        InvariantViolationError: If a restriction does not land on the complement of S1 or S2.

    """
    mk = relabeled_markers(pc=pc, relabeling=relabeling) if mk is None else mk
    images: MarkerImages = marker_images(pc=pc, relabeling=relabeling, mk=mk)
    supports: SupportSets = support_sets(pc=pc, relabeling=relabeling, mk=mk)
    lambda1, lambda2, lambda3 = relabeling.lambda1, relabeling.lambda2, relabeling.lambda3
    inverse1: Permutation = lambda1.inverse()
    bar1: Permutation = compose_all(lambda3, pc.alpha3.inverse(), inverse1)
    bar2: Permutation = compose_all(lambda2, pc.alpha3.inverse(), pc.alpha2.inverse(), inverse1)

    points: range = range(1, pc.n + 1)
    taken1: set[int] = set(images.white[:-1]) | set(images.grey)
    taken2: set[int] = set(images.black) | set(images.grey)
    e1: tuple[int, ...] = tuple(u for u in points if u not in taken1)
    e2: tuple[int, ...] = tuple(u for u in points if u not in taken2)
    range1: tuple[int, ...] = tuple(v for v in points if v not in supports.s1)
    range2: tuple[int, ...] = tuple(v for v in points if v not in supports.s2)
    partial1: dict[int, int] = {u: bar1(u) for u in e1}
    partial2: dict[int, int] = {u: bar2(u) for u in e2}
    if sorted(partial1.values()) != list(range1) or sorted(partial2.values()) != list(range2):
        msg: str = "partial permutations miss the complements of S1 and S2"
        raise InvariantViolationError(message=msg)

    rho1, rho2, rho3, rho4 = _ranks(e1), _ranks(e2), _ranks(range1), _ranks(range2)
    sigma1 = Permutation(images=tuple(rho3[partial1[u]] for u in e1))
    sigma2 = Permutation(images=tuple(rho4[partial2[u]] for u in e2))
    trace = ForwardTrace(
        markers=mk,
        images=images,
        e1=e1,
        e2=e2,
        rho1=rho1,
        rho2=rho2,
        rho3=rho3,
        rho4=rho4,
        sigma1_partial=partial1,
        sigma2_partial=partial2,
        sigma1_bar=bar1,
        sigma2_bar=bar2,
    )
    return sigma1, sigma2, trace
