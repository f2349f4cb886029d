"""Closed-form count of cactus trees by profile."""

from __future__ import annotations

from fractions import Fraction
from typing import TYPE_CHECKING

from tricacti.algebra import trinomial
from tricacti.utils.exception import InvariantViolationError, TricactiError

if TYPE_CHECKING:
    from .base import TreeProfile


def ct_count_formula(profile: TreeProfile) -> int:
    """Number of cactus trees with ``profile``.

    (a(b - p3) + p2 p3) / (p1 p2 p3) * C(p1+p2-1-a; p1-1, p2-a-b) * C(p2+p3-1-b; p2-1, p3-b-c)
    * C(p1+p3-2-c; p3-1, p1-1-a-c), with trinomials vanishing on negative parts.

    Raises
    ------
        TricactiError: If some p_i is 0; use ``enumerate_ct`` for those profiles.
        InvariantViolationError: If the value is not an integer.

    """
    p1, p2, p3, a, b, c = profile
    if min(p1, p2, p3) < 1:
        msg: str = f"closed form needs p1, p2, p3 >= 1, got {tuple(profile)}; count with enumerate_ct instead"
        raise TricactiError(message=msg)
    value = (
        Fraction(a * (b - p3) + p2 * p3, p1 * p2 * p3)
        * trinomial(p1 + p2 - 1 - a, p1 - 1, p2 - a - b)
        * trinomial(p2 + p3 - 1 - b, p2 - 1, p3 - b - c)
        * trinomial(p1 + p3 - 2 - c, p3 - 1, p1 - 1 - a - c)
    )
    if value.denominator != 1 or value < 0:
        msg = f"tree count {value} for profile {tuple(profile)} is not a nonnegative integer"
        raise InvariantViolationError(message=msg)
    return int(value)
