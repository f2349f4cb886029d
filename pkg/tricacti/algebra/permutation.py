"""Permutations of {1..n} in one-line form.

The product convention is "rightmost factor acts first": ``compose(p, q)(i) = p(q(i))``.
With it, the triple (1)(24)(3)(5), (1)(23)(45), (15)(2)(3)(4) multiplies to the long cycle
(1 2 3 4 5).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import TYPE_CHECKING

from tricacti.utils.exception import DegreeMismatchError, PermutationError

if TYPE_CHECKING:
    from collections.abc import Iterable, Iterator, Sequence


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n} stored as its one-line image tuple.

    Attributes
    ----------
        images (tuple[int, ...]): ``images[i - 1]`` is the image of ``i``. The empty tuple is the
            unique permutation of the empty set.

    """

    images: tuple[int, ...]

    def __post_init__(self: Permutation) -> None:
        """Check that the images form a bijection of {1..n}."""
        images = tuple(int(value) for value in self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(1, len(images) + 1)):
            msg: str = f"not a permutation of 1..{len(images)}: {list(images)}"
            raise PermutationError(message=msg)

    @classmethod
    def identity(cls: type[Permutation], n: int) -> Permutation:
        """Return the identity of degree n."""
        return cls(images=tuple(range(1, n + 1)))

    @classmethod
    def long_cycle(cls: type[Permutation], n: int) -> Permutation:
        """Return the long cycle (1 2 ... n), mapping i to i + 1 and n to 1."""
        return cls(images=tuple(list(range(2, n + 1)) + [1])) if n else cls(images=())

    @classmethod
    def from_cycles(cls: type[Permutation], n: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        """Build a permutation of degree n from cycles; omitted points are fixed.

        Args:
        ----
            n (int): Degree.
            cycles (Iterable[Sequence[int]]): Cycles such as ``[(2, 4), (1, 5)]``.

        Raises:
        ------
            PermutationError: If a point repeats or falls outside 1..n.

        """
        images: list[int] = list(range(1, n + 1))
        seen: set[int] = set()
        for cycle in cycles:
            for position, point in enumerate(cycle):
                if not 1 <= point <= n or point in seen:
                    msg: str = f"invalid cycle {tuple(cycle)} for degree {n}"
                    raise PermutationError(message=msg)
                seen.add(point)
                images[point - 1] = cycle[(position + 1) % len(cycle)]
        return cls(images=tuple(images))

    @property
    def n(self: Permutation) -> int:
        """Degree of the permutation."""
        return len(self.images)

    def __call__(self: Permutation, point: int) -> int:
        """Return the image of ``point`` (1-based)."""
        if not 1 <= point <= self.n:
            msg: str = f"point {point} outside 1..{self.n}"
            raise PermutationError(message=msg)
        return self.images[point - 1]

    def __mul__(self: Permutation, other: Permutation) -> Permutation:
        """Return ``compose(self, other)``."""
        return compose(p=self, q=other)

    def __iter__(self: Permutation) -> Iterator[int]:
        """Iterate over the one-line images."""
        return iter(self.images)

    def inverse(self: Permutation) -> Permutation:
        """Return the inverse permutation, computed once per instance."""
        return self._inverse

    @cached_property
    def _inverse(self: Permutation) -> Permutation:
        images: list[int] = [0] * self.n
        for point, image in enumerate(self.images, start=1):
            images[image - 1] = point
        return Permutation(images=tuple(images))

    def image_of(self: Permutation, points: Iterable[int]) -> frozenset[int]:
        """Return the image of a set of points."""
        return frozenset(self(point) for point in points)

    def cycles(self: Permutation) -> tuple[tuple[int, ...], ...]:
        """Return the canonical cycle decomposition; see :func:`cycles`."""
        return self._cycles

    @cached_property
    def _cycles(self: Permutation) -> tuple[tuple[int, ...], ...]:
        return cycles(p=self)

    def cycle_count(self: Permutation) -> int:
        """Number of cycles, fixed points included."""
        return len(self.cycles())

    def cycle_type(self: Permutation) -> tuple[int, ...]:
        """Cycle lengths in decreasing order."""
        return tuple(sorted((len(cycle) for cycle in self.cycles()), reverse=True))

    def is_identity(self: Permutation) -> bool:
        """Return True for the identity of any degree."""
        return all(point == image for point, image in enumerate(self.images, start=1))

    def to_list(self: Permutation) -> list[int]:
        """One-line form as a list, the serialized shape."""
        return list(self.images)

    def to_cycle_string(self: Permutation) -> str:
        """Cycle notation with fixed points, e.g. ``(1)(2 4)(3)(5)``."""
        return "".join("(" + " ".join(str(point) for point in cycle) + ")" for cycle in self.cycles())


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Return r with r(i) = p(q(i)).

    Raises
    ------
        DegreeMismatchError: If the degrees differ.

    """
    if p.n != q.n:
        msg: str = f"incompatible degrees: {p.n} and {q.n}"
        raise DegreeMismatchError(message=msg)
    return Permutation(images=tuple(p.images[image - 1] for image in q.images))


def compose_all(*factors: Permutation) -> Permutation:
    """Compose factors right to left: ``compose_all(a, b, c)(i) = a(b(c(i)))``."""
    if not factors:
        msg: str = "compose_all needs at least one factor"
        raise DegreeMismatchError(message=msg)
    result: Permutation = factors[-1]
    for factor in reversed(factors[:-1]):
        result = compose(p=factor, q=result)
    return result


def cycles(p: Permutation) -> tuple[tuple[int, ...], ...]:
    """Decompose ``p`` into cycles.

    Each cycle starts at its minimum and cycles are sorted by minimum; fixed points appear as
    1-cycles, so ``len(cycles(p))`` is the cycle count.
    """
    seen: list[bool] = [False] * (p.n + 1)
    result: list[tuple[int, ...]] = []
    for start in range(1, p.n + 1):
        if seen[start]:
            continue
        cycle: list[int] = []
        point: int = start
        while not seen[point]:
            seen[point] = True
            cycle.append(point)
            point = p.images[point - 1]
        result.append(tuple(cycle))
    return tuple(result)


def count_cycles(images: Sequence[int]) -> int:
    """Count cycles of a raw 1-based image sequence; the brute-force hot path avoids object creation."""
    n: int = len(images)
    seen: list[bool] = [False] * (n + 1)
    count: int = 0
    for start in range(1, n + 1):
        if seen[start]:
            continue
        count += 1
        point: int = start
        while not seen[point]:
            seen[point] = True
            point = images[point - 1]
    return count
