"""Partitioned 3-cacti: a factorization plus three partitions stable under the factors.

Block indexing used by the bijection puts the white block containing 1 last; grey and black
blocks keep their canonical order (sorted by minimum).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING

from pydantic import BaseModel, Field

from tricacti.algebra import Permutation, SetPartition
from tricacti.utils.exception import DegreeMismatchError, PermutationError

from .triple import FactorTriple, derive_alpha3

if TYPE_CHECKING:
    from collections.abc import Sequence


@dataclass(frozen=True)
class PartitionedCactus:
    """The 5-tuple (pi1, pi2, pi3, alpha1, alpha2); alpha3 is derived."""

    alpha1: Permutation
    alpha2: Permutation
    pi1: SetPartition
    pi2: SetPartition
    pi3: SetPartition
    alpha3: Permutation = field(init=False, compare=False, repr=False)

    def __post_init__(self: PartitionedCactus) -> None:
        """Derive alpha3 and check that all parts share the ground set."""
        sizes: set[int] = {self.alpha1.n, self.alpha2.n, self.pi1.n, self.pi2.n, self.pi3.n}
        if len(sizes) != 1:
            msg: str = f"incompatible degrees among factors and partitions: {sorted(sizes)}"
            raise DegreeMismatchError(message=msg)
        object.__setattr__(self, "alpha3", derive_alpha3(alpha1=self.alpha1, alpha2=self.alpha2))

    @property
    def n(self: PartitionedCactus) -> int:
        """Ground-set size."""
        return self.alpha1.n

    @property
    def p(self: PartitionedCactus) -> tuple[int, int, int]:
        """Block counts (p1, p2, p3)."""
        return (len(self.pi1), len(self.pi2), len(self.pi3))

    @property
    def triple(self: PartitionedCactus) -> FactorTriple:
        """Underlying factorization."""
        return FactorTriple(alpha1=self.alpha1, alpha2=self.alpha2, alpha3=self.alpha3)

    def white_blocks(self: PartitionedCactus) -> tuple[tuple[int, ...], ...]:
        """Blocks of pi1 with the block containing 1 moved last."""
        blocks: tuple[tuple[int, ...], ...] = self.pi1.blocks
        return blocks[1:] + blocks[:1]

    def black_blocks(self: PartitionedCactus) -> tuple[tuple[int, ...], ...]:
        """Blocks of pi2 in canonical order."""
        return self.pi2.blocks

    def grey_blocks(self: PartitionedCactus) -> tuple[tuple[int, ...], ...]:
        """Blocks of pi3 in canonical order."""
        return self.pi3.blocks


class CactusViolation(BaseModel):
    """First violated invariant of a partitioned cactus."""

    partition: str = Field(description="pi1, pi2 or pi3")
    block: list[int] | None = Field(default=None, description="Offending block, if any")
    cycle: list[int] | None = Field(default=None, description="Cycle straddling blocks, if any")
    message: str


def validate(pc: PartitionedCactus, *, declared: tuple[int, int, int] | None = None) -> CactusViolation | None:
    """Check the stability invariants of ``pc``.

    Args:
    ----
        pc (PartitionedCactus): Candidate.
        declared (tuple[int, int, int] | None): Expected block counts, if the caller has them.

    Returns:
    -------
        CactusViolation | None: The first violation found, or None when ``pc`` is valid.

    """
    factors = (("pi1", pc.pi1, pc.alpha1), ("pi2", pc.pi2, pc.alpha2), ("pi3", pc.pi3, pc.alpha3))
    for position, (name, partition, perm) in enumerate(factors):
        if declared is not None and len(partition) != declared[position]:
            return CactusViolation(
                partition=name,
                message=f"{name} has {len(partition)} blocks, expected {declared[position]}",
            )
        straddle: tuple[int, tuple[int, ...]] | None = partition.straddling_cycle(perm=perm)
        if straddle is not None:
            block_position, cycle = straddle
            return CactusViolation(
                partition=name,
                block=list(partition.blocks[block_position]),
                cycle=list(cycle),
                message=f"cycle {tuple(cycle)} straddles blocks of {name}",
            )
    return None


def traversal_labels(pc: PartitionedCactus, i: int) -> tuple[int, int, int]:
    """Return the white, black and grey traversal labels (i, a3^-1 a2^-1 (i), a3^-1 (i)) of triangle i.

    Raises
    ------
        PermutationError: If ``i`` is outside 1..n.

    """
    if not 1 <= i <= pc.n:
        msg: str = f"triangle index {i} outside 1..{pc.n}"
        raise PermutationError(message=msg)
    inverse3: Permutation = pc.alpha3.inverse()
    return (i, inverse3(pc.alpha2.inverse()(i)), inverse3(i))


def black_labels(pc: PartitionedCactus) -> Permutation:
    """Black traversal labels of all triangles, as the permutation a3^-1 a2^-1."""
    return pc.alpha3.inverse() * pc.alpha2.inverse()


def grey_labels(pc: PartitionedCactus) -> Permutation:
    """Grey traversal labels of all triangles, as the permutation a3^-1."""
    return pc.alpha3.inverse()


@dataclass(frozen=True)
class MarkerSet:
    """Block maxima under traversal labels and the triangles where each block is last passed.

    Index ``i`` of every tuple is block ``i + 1`` in the bijection's block order
    (white block containing 1 last).
    """

    m1: tuple[int, ...]
    m2p: tuple[int, ...]
    m3: tuple[int, ...]
    white_last: tuple[int, ...]
    black_last: tuple[int, ...]
    grey_last: tuple[int, ...]


def markers(pc: PartitionedCactus) -> MarkerSet:
    """Compute last-passage markers for every block of ``pc``."""
    return block_markers(pc=pc, white=pc.white_blocks(), black=pc.black_blocks(), grey=pc.grey_blocks())


def block_markers(
    pc: PartitionedCactus,
    white: Sequence[Sequence[int]],
    black: Sequence[Sequence[int]],
    grey: Sequence[Sequence[int]],
) -> MarkerSet:
    """Markers of ``pc`` for an explicit block order of each colour."""
    alpha2, alpha3 = pc.alpha2, pc.alpha3
    inverse3: Permutation = alpha3.inverse()
    m1: tuple[int, ...] = tuple(max(block) for block in white)
    m2p: tuple[int, ...] = tuple(max(inverse3(point) for point in block) for block in black)
    m3: tuple[int, ...] = tuple(max(block) for block in grey)
    return MarkerSet(
        m1=m1,
        m2p=m2p,
        m3=m3,
        white_last=m1,
        black_last=tuple(alpha2(alpha3(value)) for value in m2p),
        grey_last=tuple(alpha3(value) for value in m3),
    )
