"""Reconstruction of a partitioned cactus from its image tuple."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from tricacti.algebra import Permutation, SetPartition, compose_all
from tricacti.cactus import CactusViolation, PartitionedCactus, validate
from tricacti.tree import CactusTree, Color
from tricacti.utils.exception import InvalidTupleError, InvariantViolationError, PermutationError

from .image import ImageTuple, validate_image
from .relabel import reverse_labels
from .support import MarkerImages

if TYPE_CHECKING:
    from collections.abc import Iterator, Sequence

Slot = tuple[tuple[str, int], ...]


@dataclass(frozen=True)
class _IndexedTree:
    """Children labels, parent labels and flags of each vertex, keyed by (colour, reverse label)."""

    children: dict[tuple[Color, int], tuple[int, ...]]
    parent: dict[tuple[Color, int], int]
    flags: dict[tuple[Color, int], bool]

    @classmethod
    def of(cls: type[_IndexedTree], tree: CactusTree) -> _IndexedTree:
        labels: dict[tuple[int, ...], int] = reverse_labels(tree)
        children: dict[tuple[Color, int], tuple[int, ...]] = {}
        parent: dict[tuple[Color, int], int] = {}
        flags: dict[tuple[Color, int], bool] = {}
        for path, vertex in tree.walk():
            key: tuple[Color, int] = (vertex.color, labels[path])
            kids: tuple[int, ...] = tuple(labels[(*path, position)] for position in range(len(vertex.children)))
            children[key] = kids
            flags[key] = vertex.flag
            for kid in kids:
                parent[(vertex.color.successor, kid)] = labels[path]
        return cls(children=children, parent=parent, flags=flags)

    def split(self: _IndexedTree, color: Color, label: int) -> tuple[tuple[int, ...], int | None]:
        """Children kept apart and the rightmost child merged into this vertex's slot, if flagged."""
        kids: tuple[int, ...] = self.children[(color, label)]
        if self.flags[(color, label)]:
            return kids[:-1], kids[-1]
        return kids, None


def _fill(slots: Sequence[Slot], values: Sequence[int], name: str) -> dict[tuple[str, int], int]:
    if len(slots) != len(values):
        msg: str = f"inconsistent tuple: {name} has {len(values)} values for {len(slots)} marker slots"
        raise InvalidTupleError(message=msg)
    resolved: dict[tuple[str, int], int] = {}
    for slot, value in zip(slots, sorted(values)):
        for key in slot:
            resolved[key] = value
    return resolved


def resolve_markers(tup: ImageTuple, *, check: bool = True) -> MarkerImages:
    """Recover every marker image from the support sets and the order relations read off the tree.

    Children of a vertex occupy slots inside their parent's interval in left-to-right order, just
    before the parent's own marker; a flag merges the rightmost child's slot with the parent's.

    Raises
    ------
        InvalidTupleError: If ``tup`` is malformed or a slot count disagrees with a set size.

    """
    if check:
        validate_image(tup)
    p1, p2, p3 = tup.p
    index: _IndexedTree = _IndexedTree.of(tup.tree)

    slots0: list[Slot] = []
    for i in range(1, p1 + 1):
        apart, merged = index.split(Color.WHITE, i)
        slots0.extend(((("black", j),) for j in apart))
        if i < p1:
            slots0.append(((("white", i),) + ((("black", merged),) if merged is not None else ())))
    values0 = _fill(slots0, tup.s0, "s0")

    slots1: list[Slot] = []
    for k in range(1, p3 + 1):
        apart, merged = index.split(Color.GREY, k)
        slots1.extend(((("white", i),) for i in apart))
        slots1.append(((("grey", k),) + ((("white", merged),) if merged is not None else ())))
    values1 = _fill(slots1, tup.s1, "s1")

    slots2: list[Slot] = []
    for j in range(1, p2 + 1):
        apart, merged = index.split(Color.BLACK, j)
        slots2.extend(((("grey", k),) for k in apart))
        slots2.append(((("black", j),) + ((("grey", merged),) if merged is not None else ())))
    values2 = _fill(slots2, tup.s2, "s2")

    white: tuple[int, ...] = (*(values0[("white", i)] for i in range(1, p1)), tup.n)
    black: tuple[int, ...] = tuple(values0[("black", j)] for j in range(1, p2 + 1))

    chi: Iterator[int] = iter(tup.chi)
    grey: list[int] = []
    for k in range(1, p3 + 1):
        j: int = index.parent[(Color.GREY, k)]
        if index.flags[(Color.BLACK, j)] and index.children[(Color.BLACK, j)][-1] == k:
            grey.append(black[j - 1])
        elif index.flags[(Color.GREY, k)]:
            grey.append(white[index.children[(Color.GREY, k)][-1] - 1])
        else:
            value: int | None = next(chi, None)
            if value is None:
                msg: str = "inconsistent tuple: chi is too short"
                raise InvalidTupleError(message=msg)
            grey.append(value)
    if next(chi, None) is not None:
        msg = "inconsistent tuple: chi is too long"
        raise InvalidTupleError(message=msg)

    return MarkerImages(
        white=white,
        black=black,
        grey=tuple(grey),
        grey_own=tuple(values1[("grey", k)] for k in range(1, p3 + 1)),
        white_in_grey=tuple(values1[("white", i)] for i in range(1, p1)),
        black_own=tuple(values2[("black", j)] for j in range(1, p2 + 1)),
        grey_in_black=tuple(values2[("grey", k)] for k in range(1, p3 + 1)),
    )


def _extend(
    n: int,
    sigma: Permutation,
    excluded: set[int],
    support: Sequence[int],
    fixed: Sequence[tuple[int, int]],
) -> Permutation:
    """Spread sigma over the complements by rank, then add the marker pairs."""
    domain: list[int] = [u for u in range(1, n + 1) if u not in excluded]
    target: list[int] = [v for v in range(1, n + 1) if v not in set(support)]
    if len(domain) != sigma.n or len(target) != sigma.n:
        msg: str = f"inconsistent tuple: permutation of degree {sigma.n} for {len(domain)} free points"
        raise InvalidTupleError(message=msg)
    mapping: dict[int, int] = {u: target[sigma(rank) - 1] for rank, u in enumerate(domain, start=1)}
    for source, image in fixed:
        if mapping.setdefault(source, image) != image:
            msg = f"inconsistent tuple: {source} maps to both {mapping[source]} and {image}"
            raise InvalidTupleError(message=msg)
    try:
        return Permutation(images=tuple(mapping[u] for u in range(1, n + 1)))
    except (KeyError, PermutationError) as exc:
        msg = "inconsistent tuple: marker images do not extend to a permutation"
        raise InvalidTupleError(message=msg) from exc


def _intervals(ends: Sequence[int]) -> list[tuple[int, ...]]:
    blocks: list[tuple[int, ...]] = []
    start: int = 0
    for end in ends:
        blocks.append(tuple(range(start + 1, end + 1)))
        start = end
    return blocks


def _take(pool: Iterator[int], what: str) -> int:
    value: int | None = next(pool, None)
    if value is None:
        msg: str = f"reconstruction stalled: no unassigned value left for {what}"
        raise InvariantViolationError(message=msg)
    return value


@dataclass(frozen=True)
class InverseResult:
    """Reconstructed cactus with the relabelling data recovered on the way."""

    cactus: PartitionedCactus
    images: MarkerImages
    lambda1: Permutation
    lambda2: Permutation
    lambda3: Permutation
    sigma1_bar: Permutation
    sigma2_bar: Permutation


def trace_inverse(tup: ImageTuple, *, check: bool = True) -> InverseResult:  # noqa: PLR0914
    """Rebuild the partitioned cactus of ``tup`` and keep the recovered relabellings.

    With ``check=False`` the tuple is not validated up front and the rebuilt cactus is not
    validated at the end; use it only for tuples produced by ``theta_forward`` or ``enumerate_image``.

    Raises
    ------
        InvalidTupleError: If ``tup`` is not an image tuple.
        InvariantViolationError: If reconstruction stalls on a validated tuple.

    """
    images: MarkerImages = resolve_markers(tup, check=check)
    n: int = tup.n
    p1, p2, p3 = tup.p

    bar1: Permutation = _extend(
        n=n,
        sigma=tup.sigma1,
        excluded=set(images.white[:-1]) | set(images.grey),
        support=tup.s1,
        fixed=[*zip(images.grey, images.grey_own), *zip(images.white[:-1], images.white_in_grey)],
    )
    bar2: Permutation = _extend(
        n=n,
        sigma=tup.sigma2,
        excluded=set(images.black) | set(images.grey),
        support=tup.s2,
        fixed=[*zip(images.black, images.black_own), *zip(images.grey, images.grey_in_black)],
    )
    bar1_inverse, bar2_inverse = bar1.inverse(), bar2.inverse()

    white1: list[tuple[int, ...]] = _intervals(images.white)
    black2: list[tuple[int, ...]] = _intervals(images.black_own)
    grey3: list[tuple[int, ...]] = _intervals(images.grey_own)
    black1: list[tuple[int, ...]] = [tuple(sorted(bar2_inverse.image_of(block))) for block in black2]
    grey1: list[tuple[int, ...]] = [tuple(sorted(bar1_inverse.image_of(block))) for block in grey3]
    if sum(map(len, grey3)) != n or sum(map(len, black2)) != n:
        msg: str = "inconsistent tuple: marker images do not close at n"
        raise InvalidTupleError(message=msg)

    white_of: dict[int, int] = {u: i for i, block in enumerate(white1) for u in block}
    black_of: dict[int, int] = {u: j for j, block in enumerate(black1) for u in block}
    grey_of: dict[int, int] = {u: k for k, block in enumerate(grey1) for u in block}
    pools1: list[Iterator[int]] = [iter(block) for block in white1]
    pools2: list[Iterator[int]] = [iter(block) for block in black2]
    pools3: list[Iterator[int]] = [iter(block) for block in grey3]

    lam1: list[int] = [0] * (n + 1)
    lam2: list[int] = [0] * (n + 1)
    lam3: list[int] = [0] * (n + 1)
    lam1[1] = _take(pools1[p1 - 1], "lambda1(1)")
    for i in range(1, n + 1):
        lam3[i] = _take(pools3[grey_of[lam1[i]]], f"lambda3({i})")
        lam2[i] = _take(pools2[black_of[bar1_inverse(lam3[i])]], f"lambda2({i})")
        if i < n:
            lam1[i + 1] = _take(pools1[white_of[bar2_inverse(lam2[i])]], f"lambda1({i + 1})")

    try:
        lambda1 = Permutation(images=tuple(lam1[1:]))
        lambda2 = Permutation(images=tuple(lam2[1:]))
        lambda3 = Permutation(images=tuple(lam3[1:]))
    except PermutationError as exc:
        msg = "reconstruction produced a non-bijective relabelling"
        raise InvariantViolationError(message=msg) from exc

    inverse1: Permutation = lambda1.inverse()
    pi1 = SetPartition(n=n, blocks=tuple(tuple(inverse1.image_of(block)) for block in white1))
    pi2 = SetPartition(n=n, blocks=tuple(tuple(inverse1.image_of(block)) for block in black1))
    pi3 = SetPartition(n=n, blocks=tuple(tuple(inverse1.image_of(block)) for block in grey1))
    alpha1: Permutation = compose_all(Permutation.long_cycle(n), lambda2.inverse(), bar2, lambda1)
    alpha2: Permutation = compose_all(inverse1, bar2_inverse, lambda2, lambda3.inverse(), bar1, lambda1)
    cactus = PartitionedCactus(alpha1=alpha1, alpha2=alpha2, pi1=pi1, pi2=pi2, pi3=pi3)
    if check:
        violation: CactusViolation | None = validate(cactus, declared=(p1, p2, p3))
        if violation is not None:
            msg = f"reconstructed cactus is invalid: {violation.message}"
            raise InvariantViolationError(message=msg)
    return InverseResult(
        cactus=cactus,
        images=images,
        lambda1=lambda1,
        lambda2=lambda2,
        lambda3=lambda3,
        sigma1_bar=bar1,
        sigma2_bar=bar2,
    )


def theta_inverse(tup: ImageTuple, *, check: bool = True) -> PartitionedCactus:
    """Rebuild the partitioned cactus whose image is ``tup``."""
    return trace_inverse(tup, check=check).cactus
