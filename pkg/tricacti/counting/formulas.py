"""Closed forms for the number of partitioned cacti with block counts (p1, p2, p3)."""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import factorial, perm

from tricacti.algebra import binomial, multinomial, stirling2
from tricacti.bijection import ImageSizes
from tricacti.tree import TreeProfile, ct_count_formula
from tricacti.utils.exception import InvariantViolationError, TricactiError

from .mtable import MTable, m_bruteforce


def _check_blocks(p1: int, p2: int, p3: int) -> None:
    if min(p1, p2, p3) < 1:
        msg: str = f"block counts must be at least 1, got {(p1, p2, p3)}"
        raise TricactiError(message=msg)


def _as_integer(value: Fraction, what: str) -> int:
    if value.denominator != 1 or value < 0:
        msg: str = f"{what} = {value} is not a nonnegative integer"
        raise InvariantViolationError(message=msg)
    return int(value)


def theorem1_factor(p1: int, p2: int, p3: int, n: int) -> int:
    """Integer factor C(n-1, p3-1) * sum_a C(n-p2, p1-1-a) C(n-p3, a) C(n-1-a, n-p2)."""
    inner: int = sum(
        binomial(n - p2, p1 - 1 - a) * binomial(n - p3, a) * binomial(n - 1 - a, n - p2) for a in range(p1)
    )
    return binomial(n - 1, p3 - 1) * inner


def i_count_formula(p1: int, p2: int, p3: int, n: int) -> int:
    """Size of the image set, n!^2 / (p1! p2! p3!) times ``theorem1_factor``.

    Raises
    ------
        TricactiError: If some p_i < 1.
        InvariantViolationError: If the value is not an integer.

    """
    _check_blocks(p1, p2, p3)
    value = Fraction(factorial(n) ** 2, factorial(p1) * factorial(p2) * factorial(p3)) * theorem1_factor(
        p1, p2, p3, n
    )
    return _as_integer(value=value, what=f"|I({p1}, {p2}, {p3}, {n})|")


def jackson_symmetric(p1: int, p2: int, p3: int, n: int) -> int:
    """Symmetric form n!^2 / (p1! p2! p3!) sum_{a,b,c} C(n-1; a, b, c, p1-1-a-c, p2-1-a-b, p3-1-b-c).

    The multinomial has an implicit remainder part and vanishes on negative parts, so the sum runs
    over the full box a < p1, b < p2, c < p3.
    """
    _check_blocks(p1, p2, p3)
    total: int = sum(
        multinomial(n - 1, [a, b, c, p1 - 1 - a - c, p2 - 1 - a - b, p3 - 1 - b - c])
        for a, b, c in product(range(p1), range(p2), range(p3))
    )
    value = Fraction(factorial(n) ** 2 * total, factorial(p1) * factorial(p2) * factorial(p3))
    return _as_integer(value=value, what=f"symmetric |I({p1}, {p2}, {p3}, {n})|")


def i_count_from_trees(p1: int, p2: int, p3: int, n: int) -> int:
    """Size of the image set summed over flag counts before any simplification.

    Each profile (p, a, b, c) contributes |CT| times the choices of S0, S1 \\ {n}, S2 \\ {n}, chi
    (an arrangement outside S0) and the two permutations.
    """
    _check_blocks(p1, p2, p3)
    total: int = 0
    for a, b, c in product(range(p1), range(p2 + 1), range(p3 + 1)):
        pr = TreeProfile(p1=p1, p2=p2, p3=p3, a=a, b=b, c=c)
        sizes: ImageSizes = ImageSizes.of(pr=pr, n=n)
        if not sizes.feasible(n):
            continue
        trees: int = ct_count_formula(pr)
        if not trees:
            continue
        total += (
            trees
            * binomial(n, sizes.s0)
            * binomial(n - 1, sizes.s1 - 1)
            * binomial(n - 1, sizes.s2 - 1)
            * perm(n - sizes.s0, sizes.chi)
            * factorial(sizes.sigma1)
            * factorial(sizes.sigma2)
        )
    return total


def cc_count_stirling(p1: int, p2: int, p3: int, n: int, table: MTable | None = None, *, force: bool = False) -> int:
    """Sum of S(n1, p1) S(n2, p2) S(n3, p3) M(n1, n2, n3, n) over the factorization table.

    Args:
    ----
        p1 (int): White block count.
        p2 (int): Black block count.
        p3 (int): Grey block count.
        n (int): Size.
        table (MTable | None): Precomputed table; built by brute force when absent.
        force (bool): Ignore the enumeration limit when building the table.

    Raises:
    ------
        LimitExceededError: If the table must be built and ``n`` exceeds the limit.

    """
    if table is None:
        table = m_bruteforce(n=n, force=force)
    return sum(
        stirling2(n1, p1) * stirling2(n2, p2) * stirling2(n3, p3) * count
        for (n1, n2, n3), count in table.counts.items()
    )
