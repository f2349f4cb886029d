"""Elements of the image set: (tree, S0, S1, S2, chi, sigma1, sigma2)."""

from __future__ import annotations

from dataclasses import dataclass

from tricacti.algebra import Permutation
from tricacti.tree import CactusTree, TreeProfile, TreeViolation, profile, validate_tree
from tricacti.utils.exception import InvalidTupleError


@dataclass(frozen=True)
class ImageTuple:
    """Codomain element of the bijection.

    Sets are stored as ascending tuples; ``chi`` keeps its order. S1 and S2 include n.
    """

    n: int
    tree: CactusTree
    s0: tuple[int, ...]
    s1: tuple[int, ...]
    s2: tuple[int, ...]
    chi: tuple[int, ...]
    sigma1: Permutation
    sigma2: Permutation

    @property
    def profile(self: ImageTuple) -> TreeProfile:
        """Profile (p1, p2, p3, a, b, c) of the tree."""
        return profile(self.tree)

    @property
    def p(self: ImageTuple) -> tuple[int, int, int]:
        """Block counts (p1, p2, p3)."""
        pr: TreeProfile = self.profile
        return (pr.p1, pr.p2, pr.p3)


@dataclass(frozen=True)
class ImageSizes:
    """Sizes every component must have for a given profile and n."""

    s0: int
    s1: int
    s2: int
    chi: int
    sigma1: int
    sigma2: int

    @classmethod
    def of(cls: type[ImageSizes], pr: TreeProfile, n: int) -> ImageSizes:
        """Sizes for profile ``pr`` on n points."""
        return cls(
            s0=pr.p1 - 1 + pr.p2 - pr.a,
            s1=pr.p1 - 1 + pr.p3 - pr.c,
            s2=pr.p2 + pr.p3 - pr.b,
            chi=pr.p3 - pr.b - pr.c,
            sigma1=n - pr.p1 + 1 - pr.p3 + pr.c,
            sigma2=n - pr.p2 - pr.p3 + pr.b,
        )

    def feasible(self: ImageSizes, n: int) -> bool:
        """True when some tuple can have these sizes."""
        return (
            min(self.s0, self.chi, self.sigma1, self.sigma2) >= 0
            and self.s1 >= 1
            and self.s2 >= 1
            and max(self.s0, self.s1, self.s2) <= n
            and self.s0 + self.chi <= n
        )


def _check_set(name: str, values: tuple[int, ...], n: int, size: int) -> None:
    if list(values) != sorted(set(values)) or any(not 1 <= value <= n for value in values):
        msg: str = f"{name} must be an ascending set of distinct values in 1..{n}, got {list(values)}"
        raise InvalidTupleError(message=msg)
    if len(values) != size:
        msg = f"{name} has size {len(values)}, expected {size}"
        raise InvalidTupleError(message=msg)


def validate_image(tup: ImageTuple) -> None:
    """Check the size and membership constraints of ``tup``.

    Raises
    ------
        InvalidTupleError: Naming the first offending component.

    """
    violation: TreeViolation | None = validate_tree(tup.tree)
    if violation is not None:
        msg: str = f"tree: {violation.message} at path {violation.path}"
        raise InvalidTupleError(message=msg)
    pr: TreeProfile = tup.profile
    if min(pr.p1, pr.p2, pr.p3) < 1:
        msg = f"tree needs at least one vertex of each colour, got profile {tuple(pr)}"
        raise InvalidTupleError(message=msg)
    sizes: ImageSizes = ImageSizes.of(pr=pr, n=tup.n)
    _check_set("s0", tup.s0, tup.n, sizes.s0)
    _check_set("s1", tup.s1, tup.n, sizes.s1)
    _check_set("s2", tup.s2, tup.n, sizes.s2)
    if tup.n not in tup.s1 or tup.n not in tup.s2:
        msg = f"s1 and s2 must contain n = {tup.n}"
        raise InvalidTupleError(message=msg)
    if len(set(tup.chi)) != len(tup.chi) or any(not 1 <= value <= tup.n for value in tup.chi):
        msg = f"chi must have distinct values in 1..{tup.n}, got {list(tup.chi)}"
        raise InvalidTupleError(message=msg)
    if len(tup.chi) != sizes.chi:
        msg = f"chi has length {len(tup.chi)}, expected {sizes.chi}"
        raise InvalidTupleError(message=msg)
    if set(tup.chi) & set(tup.s0):
        msg = "chi must be disjoint from s0"
        raise InvalidTupleError(message=msg)
    if tup.sigma1.n != sizes.sigma1:
        msg = f"sigma1 has degree {tup.sigma1.n}, expected {sizes.sigma1}"
        raise InvalidTupleError(message=msg)
    if tup.sigma2.n != sizes.sigma2:
        msg = f"sigma2 has degree {tup.sigma2.n}, expected {sizes.sigma2}"
        raise InvalidTupleError(message=msg)
