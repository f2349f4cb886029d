"""Reverse labelling of tree vertices and the relabelling permutations built from it."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import TYPE_CHECKING, Protocol

from tricacti.algebra import Permutation
from tricacti.tree import Color

if TYPE_CHECKING:
    from collections.abc import Iterator, Sequence

    from tricacti.cactus import PartitionedCactus

    from .labeled import LabeledTree


class PlaneVertex(Protocol):
    """Anything with a colour and ordered children."""

    color: Color

    @property
    def children(self: PlaneVertex) -> Sequence[PlaneVertex]: ...  # noqa: D102

    def walk(self: PlaneVertex) -> Iterator[tuple[tuple[int, ...], PlaneVertex]]: ...  # noqa: D102


def reverse_labels(root: PlaneVertex) -> dict[tuple[int, ...], int]:
    """Label each colour p, p-1, ..., 1 level by level from the root, right to left within a level.

    Returns
    -------
        dict[tuple[int, ...], int]: Label of the vertex at each path. The root gets p1.

    """
    remaining: Counter[Color] = Counter(vertex.color for _, vertex in root.walk())
    labels: dict[tuple[int, ...], int] = {}
    level: list[tuple[tuple[int, ...], PlaneVertex]] = [((), root)]
    while level:
        for path, vertex in reversed(level):
            labels[path] = remaining[vertex.color]
            remaining[vertex.color] -= 1
        level = [
            ((*path, position), child)
            for path, vertex in level
            for position, child in enumerate(vertex.children)
        ]
    return labels


def relabel_from_string(word: Sequence[int]) -> Permutation:
    """Permutation sending ``word[t]`` to ``t + 1``."""
    images: list[int] = [0] * len(word)
    for position, point in enumerate(word, start=1):
        images[point - 1] = position
    return Permutation(images=tuple(images))


@dataclass(frozen=True)
class Relabeling:
    """Relabelling permutations with the blocks re-indexed by reverse labels.

    ``white[i - 1]`` is the pi1 block labelled i, and likewise for ``black`` and ``grey``.
    """

    lambda1: Permutation
    lambda2: Permutation
    lambda3: Permutation
    white: tuple[tuple[int, ...], ...]
    black: tuple[tuple[int, ...], ...]
    grey: tuple[tuple[int, ...], ...]


def relabelings(pc: PartitionedCactus, labeled: LabeledTree) -> Relabeling:
    """Re-index blocks by reverse labels and build lambda1, lambda2, lambda3.

    lambda1 reads the ascending white blocks in label order, lambda2 the ascending sets
    a3^-1(pi2 block), lambda3 the ascending grey blocks; each maps its word positionally onto 1..n.
    """
    labels: dict[tuple[int, ...], int] = reverse_labels(labeled.root)
    ordered: dict[Color, dict[int, tuple[int, ...]]] = {Color.WHITE: {}, Color.BLACK: {}, Color.GREY: {}}
    for path, vertex in labeled.root.walk():
        ordered[vertex.color][labels[path]] = vertex.block
    white = tuple(ordered[Color.WHITE][label] for label in sorted(ordered[Color.WHITE]))
    black = tuple(ordered[Color.BLACK][label] for label in sorted(ordered[Color.BLACK]))
    grey = tuple(ordered[Color.GREY][label] for label in sorted(ordered[Color.GREY]))
    inverse3: Permutation = pc.alpha3.inverse()
    omega: list[int] = [point for block in white for point in sorted(block)]
    upsilon: list[int] = [point for block in black for point in sorted(inverse3.image_of(block))]
    nu: list[int] = [point for block in grey for point in sorted(block)]
    return Relabeling(
        lambda1=relabel_from_string(omega),
        lambda2=relabel_from_string(upsilon),
        lambda3=relabel_from_string(nu),
        white=white,
        black=black,
        grey=grey,
    )
