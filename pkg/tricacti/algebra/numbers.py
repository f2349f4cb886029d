"""Exact integer combinatorics: Stirling numbers, binomials, multinomials.

All functions are total: out-of-range arguments give 0 instead of raising, which lets the
counting formulas sum over rectangles without boundary bookkeeping.
"""

from __future__ import annotations

from functools import cache
from math import comb, factorial
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from collections.abc import Sequence


@cache
def stirling2(a: int, b: int) -> int:
    """Number of partitions of an a-set into b nonempty unordered blocks.

    Uses the recurrence S(a, b) = b S(a-1, b) + S(a-1, b-1) with S(0, 0) = 1.
    """
    if a < 0 or b < 0 or b > a:
        return 0
    if a == b:
        return 1
    if b == 0:
        return 0
    return b * stirling2(a - 1, b) + stirling2(a - 1, b - 1)


def binomial(n: int, k: int) -> int:
    """Binomial coefficient, 0 when k < 0, n < 0 or k > n."""
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def multinomial(n: int, parts: Sequence[int]) -> int:
    """Return n! / (k_1! ... k_m! (n - sum k)!).

    The remainder part ``n - sum k`` is implicit. A negative part or ``sum k > n`` gives 0, so
    ``multinomial(n, [k1, k2])`` is the trinomial C(n; k1, k2).
    """
    if n < 0 or any(part < 0 for part in parts):
        return 0
    rest: int = n - sum(parts)
    if rest < 0:
        return 0
    denominator: int = factorial(rest)
    for part in parts:
        denominator *= factorial(part)
    return factorial(n) // denominator


def trinomial(n: int, k1: int, k2: int) -> int:
    """C(n; k1, k2) = n! / (k1! k2! (n - k1 - k2)!), zero on any negative part."""
    return multinomial(n, [k1, k2])
