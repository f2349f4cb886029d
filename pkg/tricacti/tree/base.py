"""Rooted plane cactus trees with cyclic colouring and triangle flags.

A flag on vertex v records a triangle made of v's parent, v, and v's rightmost child.
Flagged whites count in ``a``, flagged blacks in ``b`` and flagged greys in ``c``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING, NamedTuple

from pydantic import BaseModel

if TYPE_CHECKING:
    from collections.abc import Iterator


class Color(str, Enum):
    """Vertex colours; children take the cyclic successor of their parent's colour."""

    WHITE = "white"
    BLACK = "black"
    GREY = "grey"

    @property
    def successor(self: Color) -> Color:
        """Colour of this vertex's children."""
        return _SUCCESSOR[self]

    @property
    def index(self: Color) -> int:
        """0 for white, 1 for black, 2 for grey."""
        return _ORDER.index(self)


_ORDER: tuple[Color, Color, Color] = (Color.WHITE, Color.BLACK, Color.GREY)
_SUCCESSOR: dict[Color, Color] = {Color.WHITE: Color.BLACK, Color.BLACK: Color.GREY, Color.GREY: Color.WHITE}


@dataclass(frozen=True)
class CactusTree:
    """One vertex and its ordered subtrees."""

    color: Color
    children: tuple[CactusTree, ...] = ()
    flag: bool = False

    def walk(self: CactusTree, path: tuple[int, ...] = ()) -> Iterator[tuple[tuple[int, ...], CactusTree]]:
        """Yield ``(path, vertex)`` in preorder; a path lists child positions from the root."""
        yield path, self
        for position, child in enumerate(self.children):
            yield from child.walk(path=(*path, position))

    def size(self: CactusTree) -> int:
        """Vertex count."""
        return 1 + sum(child.size() for child in self.children)

    def shape(self: CactusTree) -> CactusTree:
        """Same tree with every flag cleared."""
        return CactusTree(color=self.color, children=tuple(child.shape() for child in self.children))


class TreeProfile(NamedTuple):
    """Vertex counts per colour and triangle counts (a, b, c)."""

    p1: int
    p2: int
    p3: int
    a: int = 0
    b: int = 0
    c: int = 0

    @property
    def vertices(self: TreeProfile) -> int:
        """Total vertex count."""
        return self.p1 + self.p2 + self.p3


class TreeViolation(BaseModel):
    """First violated invariant of a cactus tree, located by its path from the root."""

    path: list[int]
    message: str


def validate_tree(tree: CactusTree) -> TreeViolation | None:
    """Check colouring, flag placement and the no-shared-edge rule.

    Returns
    -------
        TreeViolation | None: The first violation in preorder, or None.

    """
    if tree.color is not Color.WHITE:
        return TreeViolation(path=[], message="the root must be white")
    if tree.flag:
        return TreeViolation(path=[], message="the root cannot carry a triangle flag")
    for path, vertex in tree.walk():
        if vertex.flag and not vertex.children:
            return TreeViolation(path=list(path), message="flagged vertex without children")
        for position, child in enumerate(vertex.children):
            if child.color is not vertex.color.successor:
                return TreeViolation(
                    path=[*path, position],
                    message=f"{child.color.value} child under a {vertex.color.value} vertex",
                )
        if vertex.flag and vertex.children[-1].flag:
            return TreeViolation(
                path=[*path, len(vertex.children) - 1],
                message="rightmost child of a flagged vertex is flagged",
            )
    return None


def profile(tree: CactusTree) -> TreeProfile:
    """Count vertices and flags per colour."""
    vertices: list[int] = [0, 0, 0]
    flags: list[int] = [0, 0, 0]
    for _, vertex in tree.walk():
        vertices[vertex.color.index] += 1
        flags[vertex.color.index] += int(vertex.flag)
    return TreeProfile(*vertices, *flags)
