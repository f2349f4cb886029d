"""Set partitions of {1..n} in canonical form."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from sympy.utilities.iterables import multiset_partitions

from tricacti.utils.exception import PartitionError

if TYPE_CHECKING:
    from collections.abc import Iterable, Iterator, Sequence

    from .permutation import Permutation


@dataclass(frozen=True)
class SetPartition:
    """Disjoint nonempty blocks covering {1..n}.

    Blocks are stored sorted by their minimum with ascending elements, so two partitions
    compare equal exactly when they have the same blocks.
    """

    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self: SetPartition) -> None:
        """Canonicalize and validate the blocks."""
        blocks: list[tuple[int, ...]] = [tuple(sorted(int(point) for point in block)) for block in self.blocks]
        if any(not block for block in blocks):
            msg: str = "set partition with an empty block"
            raise PartitionError(message=msg)
        blocks.sort(key=lambda block: block[0])
        flat: list[int] = [point for block in blocks for point in block]
        if sorted(flat) != list(range(1, self.n + 1)):
            msg = f"blocks {blocks} do not partition 1..{self.n}"
            raise PartitionError(message=msg)
        object.__setattr__(self, "blocks", tuple(blocks))

    @classmethod
    def from_blocks(cls: type[SetPartition], blocks: Iterable[Iterable[int]], n: int | None = None) -> SetPartition:
        """Build a partition; ``n`` defaults to the number of points."""
        materialized: list[tuple[int, ...]] = [tuple(block) for block in blocks]
        size: int = sum(len(block) for block in materialized) if n is None else n
        return cls(n=size, blocks=tuple(materialized))

    def __len__(self: SetPartition) -> int:
        """Number of blocks."""
        return len(self.blocks)

    def __iter__(self: SetPartition) -> Iterator[tuple[int, ...]]:
        """Iterate over blocks in canonical order."""
        return iter(self.blocks)

    def block_map(self: SetPartition) -> dict[int, int]:
        """Map each point to the position of its block in canonical order (0-based)."""
        return {point: position for position, block in enumerate(self.blocks) for point in block}

    def to_list(self: SetPartition) -> list[list[int]]:
        """Serialized form: array of arrays in canonical order."""
        return [list(block) for block in self.blocks]

    def straddling_cycle(self: SetPartition, perm: Permutation) -> tuple[int, tuple[int, ...]] | None:
        """Return ``(block position, cycle)`` for the first cycle of ``perm`` split by this partition."""
        owner: dict[int, int] = self.block_map()
        for cycle in perm.cycles():
            homes: set[int] = {owner[point] for point in cycle}
            if len(homes) > 1:
                return min(homes), cycle
        return None


def cycle_partitions(perm: Permutation, blocks: int) -> Iterator[SetPartition]:
    """Yield every partition of {1..n} into ``blocks`` blocks that are unions of cycles of ``perm``.

    Realized as the set partitions of the cycle list, so the order is deterministic.
    """
    cycle_list: tuple[tuple[int, ...], ...] = perm.cycles()
    if blocks < 1 or blocks > len(cycle_list):
        return
    for grouping in multiset_partitions(list(range(len(cycle_list))), blocks):
        merged: list[list[int]] = [_merge(cycle_list, group) for group in grouping]
        yield SetPartition(n=perm.n, blocks=tuple(tuple(block) for block in merged))


def _merge(cycle_list: Sequence[Sequence[int]], group: Sequence[int]) -> list[int]:
    return sorted(point for index in group for point in cycle_list[index])
