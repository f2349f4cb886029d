"""The last-passage tree of a partitioned cactus and its triangle flags."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from tricacti.cactus import MarkerSet, PartitionedCactus, markers
from tricacti.tree import CactusTree, Color
from tricacti.utils.exception import InvariantViolationError

if TYPE_CHECKING:
    from collections.abc import Iterator


@dataclass(frozen=True)
class LabeledVertex:
    """A tree vertex standing for one block.

    Attributes
    ----------
        color (Color): White for pi1 blocks, black for pi2, grey for pi3.
        index (int): 1-based position of the block in marker order (white root last).
        block (tuple[int, ...]): The block itself.
        key (int): Value ordering this vertex among its siblings.
        children (tuple[LabeledVertex, ...]): Ordered children.

    """

    color: Color
    index: int
    block: tuple[int, ...]
    key: int = 0
    children: tuple[LabeledVertex, ...] = ()

    def walk(self: LabeledVertex, path: tuple[int, ...] = ()) -> Iterator[tuple[tuple[int, ...], LabeledVertex]]:
        """Yield ``(path, vertex)`` in preorder."""
        yield path, self
        for position, child in enumerate(self.children):
            yield from child.walk(path=(*path, position))


@dataclass(frozen=True)
class LabeledTree:
    """Last-passage tree with the markers it was built from."""

    root: LabeledVertex
    markers: MarkerSet

    def shape(self: LabeledTree) -> CactusTree:
        """Unflagged cactus tree of the same shape."""
        return _strip(self.root)


def _strip(vertex: LabeledVertex) -> CactusTree:
    return CactusTree(color=vertex.color, children=tuple(_strip(child) for child in vertex.children))


def build_labeled_tree(pc: PartitionedCactus) -> LabeledTree:
    """Hang every block under the block holding its last-passage triangle.

    A black block hangs under the white block containing its last-passage triangle
    a2 a3 (m2'); a grey block hangs under the black block containing a3 (m3); a non-root white
    block hangs under the grey block containing m1. Siblings are sorted by that triangle read in
    the parent's traversal labels.

    Raises
    ------
        InvariantViolationError: If the blocks do not form one tree.

    """
    mk: MarkerSet = markers(pc)
    inverse2, inverse3 = pc.alpha2.inverse(), pc.alpha3.inverse()
    blocks: dict[Color, tuple[tuple[int, ...], ...]] = {
        Color.WHITE: pc.white_blocks(),
        Color.BLACK: pc.black_blocks(),
        Color.GREY: pc.grey_blocks(),
    }
    owner: dict[Color, dict[int, int]] = {
        color: {point: index for index, block in enumerate(color_blocks, start=1) for point in block}
        for color, color_blocks in blocks.items()
    }
    hanging: dict[tuple[Color, int], list[tuple[int, Color, int]]] = {}
    for j, triangle in enumerate(mk.black_last, start=1):
        parent: tuple[Color, int] = (Color.WHITE, owner[Color.WHITE][triangle])
        hanging.setdefault(parent, []).append((triangle, Color.BLACK, j))
    for k, triangle in enumerate(mk.grey_last, start=1):
        parent = (Color.BLACK, owner[Color.BLACK][triangle])
        hanging.setdefault(parent, []).append((inverse3(inverse2(triangle)), Color.GREY, k))
    for i, triangle in enumerate(mk.m1[:-1], start=1):
        parent = (Color.GREY, owner[Color.GREY][triangle])
        hanging.setdefault(parent, []).append((inverse3(triangle), Color.WHITE, i))

    def build(color: Color, index: int, key: int) -> LabeledVertex:
        kids: list[tuple[int, Color, int]] = sorted(hanging.get((color, index), []))
        return LabeledVertex(
            color=color,
            index=index,
            block=blocks[color][index - 1],
            key=key,
            children=tuple(build(kid_color, kid_index, kid_key) for kid_key, kid_color, kid_index in kids),
        )

    p1, p2, p3 = pc.p
    root: LabeledVertex = build(Color.WHITE, p1, 0)
    reached: int = sum(1 for _ in root.walk())
    if reached != p1 + p2 + p3:
        msg: str = f"last-passage tree reaches {reached} of {p1 + p2 + p3} blocks"
        raise InvariantViolationError(message=msg)
    return LabeledTree(root=root, markers=mk)


def attach_triangles(labeled: LabeledTree, pc: PartitionedCactus) -> CactusTree:
    """Flag each non-root vertex whose rightmost child closes a triangle, then drop the labels.

    White i is flagged when a2 a3 (m2') of its rightmost black child equals m1 of i; black j when
    a3 (m3) of its rightmost grey child equals a2 a3 (m2') of j; grey k when m1 of its rightmost
    white child equals a3 (m3) of k.
    """
    del pc
    mk: MarkerSet = labeled.markers
    last_passage: dict[Color, tuple[int, ...]] = {
        Color.WHITE: mk.white_last,
        Color.BLACK: mk.black_last,
        Color.GREY: mk.grey_last,
    }

    def closes(vertex: LabeledVertex) -> bool:
        rightmost: LabeledVertex = vertex.children[-1]
        return last_passage[rightmost.color][rightmost.index - 1] == last_passage[vertex.color][vertex.index - 1]

    def convert(vertex: LabeledVertex, *, is_root: bool) -> CactusTree:
        flag: bool = not is_root and bool(vertex.children) and closes(vertex)
        children = tuple(convert(child, is_root=False) for child in vertex.children)
        return CactusTree(color=vertex.color, children=children, flag=flag)

    return convert(labeled.root, is_root=True)


def is_branch_monotone(labeled: LabeledTree) -> bool:
    """Check that block maxima grow strictly toward the root along every branch.

    Compares each vertex with its nearest same-colour ancestor (three levels up), skipping the
    white root, whose maximum is unconstrained.
    """
    mk: MarkerSet = labeled.markers
    maxima: dict[Color, tuple[int, ...]] = {Color.WHITE: mk.m1, Color.BLACK: mk.m2p, Color.GREY: mk.m3}
    vertices: dict[tuple[int, ...], LabeledVertex] = dict(labeled.root.walk())
    for path, vertex in vertices.items():
        if len(path) < 3:  # noqa: PLR2004
            continue
        ancestor_path: tuple[int, ...] = path[:-3]
        if not ancestor_path:
            continue
        ancestor: LabeledVertex = vertices[ancestor_path]
        if maxima[vertex.color][vertex.index - 1] >= maxima[ancestor.color][ancestor.index - 1]:
            return False
    return True
