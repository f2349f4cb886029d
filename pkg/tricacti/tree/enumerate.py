"""Exhaustive generation of cactus trees with a given profile."""

from __future__ import annotations

from functools import cache
from itertools import product
from typing import TYPE_CHECKING

from tricacti.utils.limits import check_limit, tree_limit

from .base import CactusTree, Color, TreeProfile

if TYPE_CHECKING:
    from collections.abc import Iterator

Counts = tuple[int, int, int]


def _minus(left: Counts, right: Counts) -> Counts:
    return (left[0] - right[0], left[1] - right[1], left[2] - right[2])


def _sub_counts(counts: Counts) -> Iterator[Counts]:
    yield from product(range(counts[0] + 1), range(counts[1] + 1), range(counts[2] + 1))


@cache
def _trees(color: Color, counts: Counts) -> tuple[CactusTree, ...]:
    """Unflagged plane trees rooted in ``color`` using exactly ``counts`` vertices per colour."""
    if counts[color.index] < 1:
        return ()
    own: list[int] = [0, 0, 0]
    own[color.index] = 1
    rest: Counts = _minus(counts, (own[0], own[1], own[2]))
    return tuple(CactusTree(color=color, children=forest) for forest in _forests(color.successor, rest))


@cache
def _forests(color: Color, counts: Counts) -> tuple[tuple[CactusTree, ...], ...]:
    """Ordered sequences of trees rooted in ``color`` whose counts add up to ``counts``."""
    if counts == (0, 0, 0):
        return ((),)
    result: list[tuple[CactusTree, ...]] = []
    for head in _sub_counts(counts):
        if head[color.index] < 1:
            continue
        tails: tuple[tuple[CactusTree, ...], ...] = _forests(color, _minus(counts, head))
        if not tails:
            continue
        result.extend((first, *tail) for first in _trees(color, head) for tail in tails)
    return tuple(result)


def enumerate_shapes(p1: int, p2: int, p3: int) -> tuple[CactusTree, ...]:
    """All unflagged cactus trees with the given vertex counts, white root."""
    return _trees(Color.WHITE, (p1, p2, p3))


def _flaggings(tree: CactusTree, *, is_root: bool, parent_forbids: bool) -> Iterator[tuple[CactusTree, Counts]]:
    """Yield every valid flag assignment of ``tree`` with its (a, b, c) flag counts.

    ``parent_forbids`` is set when the parent is flagged and this vertex is its rightmost child.
    """
    options: list[bool] = [False]
    if tree.children and not is_root and not parent_forbids:
        options.append(True)
    for flag in options:
        last: int = len(tree.children) - 1
        per_child = [
            list(_flaggings(child, is_root=False, parent_forbids=flag and position == last))
            for position, child in enumerate(tree.children)
        ]
        for combo in product(*per_child):
            counts: list[int] = [0, 0, 0]
            counts[tree.color.index] += int(flag)
            for _, child_counts in combo:
                counts = [left + right for left, right in zip(counts, child_counts)]
            children: tuple[CactusTree, ...] = tuple(child for child, _ in combo)
            yield CactusTree(color=tree.color, children=children, flag=flag), (counts[0], counts[1], counts[2])


def flag_assignments(shape: CactusTree) -> Iterator[tuple[CactusTree, Counts]]:
    """Every valid flagging of an unflagged tree, with its (a, b, c)."""
    yield from _flaggings(shape, is_root=True, parent_forbids=False)


def enumerate_ct(profile: TreeProfile, *, force: bool = False) -> Iterator[CactusTree]:
    """Yield every cactus tree with exactly ``profile``, shapes first and flags last.

    Raises
    ------
        LimitExceededError: If p1 + p2 + p3 exceeds ``tree.max_vertices`` without ``force``.

    """
    check_limit(value=profile.vertices, limit=tree_limit(), what="p1+p2+p3", force=force)
    target: Counts = (profile.a, profile.b, profile.c)
    if min(profile) < 0:
        return
    for shape in enumerate_shapes(profile.p1, profile.p2, profile.p3):
        for tree, counts in flag_assignments(shape):
            if counts == target:
                yield tree
