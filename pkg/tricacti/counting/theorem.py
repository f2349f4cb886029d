"""Trivariate polynomial check of the factorization count identity.

Both sides are built in ``QQ[x1, x2, x3]``:

* left: sum of M(n1, n2, n3, n) / n!^2 * x1^n1 x2^n2 x3^n3 from the brute-force table;
* right: sum over p of binom(x1, p1) binom(x2, p2) binom(x3, p3) * ``theorem1_factor(p, n)``.

The falling-factorial bridge sum M x^n = sum |CC(p, n)| (x1)_p1 (x2)_p2 (x3)_p3 is checked on the
same table with the Stirling-weighted class sizes, so the two routes to brute force are independent.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import factorial

from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement, ring

from tricacti.algebra import binom_poly, falling_factorial
from tricacti.utils import LOGGER

from .formulas import cc_count_stirling, theorem1_factor
from .mtable import MTable, m_bruteforce

TRI_RING, X1, X2, X3 = ring("x1,x2,x3", QQ)


@dataclass
class TheoremCheck:
    """Both sides of the identity and of its falling-factorial bridge for one n."""

    n: int
    lhs: PolyElement
    rhs: PolyElement
    bridge_lhs: PolyElement
    bridge_rhs: PolyElement

    @property
    def passed(self: TheoremCheck) -> bool:
        """True when both identities hold coefficient-wise."""
        return self.lhs == self.rhs and self.bridge_lhs == self.bridge_rhs

    def mismatches(self: TheoremCheck) -> list[tuple[int, ...]]:
        """Monomials whose coefficients differ in either identity."""
        bad: set[tuple[int, ...]] = set()
        for left, right in ((self.lhs, self.rhs), (self.bridge_lhs, self.bridge_rhs)):
            for monom in set(left) | set(right):
                if left.get(monom, QQ.zero) != right.get(monom, QQ.zero):
                    bad.add(monom)
        return sorted(bad)


def _monomial(n1: int, n2: int, n3: int) -> PolyElement:
    return X1**n1 * X2**n2 * X3**n3


def table_polynomial(table: MTable, *, normalized: bool = True) -> PolyElement:
    """Return sum of M x1^n1 x2^n2 x3^n3, divided by n!^2 when ``normalized``."""
    scale = QQ(1, factorial(table.n) ** 2) if normalized else QQ(1)
    result: PolyElement = TRI_RING.zero
    for (n1, n2, n3), count in table.counts.items():
        result += _monomial(n1, n2, n3) * (scale * count)
    return result


def theorem1_polynomial(n: int) -> PolyElement:
    """Right side: sum of binom(x1, p1) binom(x2, p2) binom(x3, p3) * theorem1_factor(p, n)."""
    result: PolyElement = TRI_RING.zero
    for p1, p2, p3 in product(range(1, n + 1), repeat=3):
        factor: int = theorem1_factor(p1, p2, p3, n)
        if factor:
            result += binom_poly(p=p1, gen=X1) * binom_poly(p=p2, gen=X2) * binom_poly(p=p3, gen=X3) * factor
    return result


def bridge_polynomial(table: MTable) -> PolyElement:
    """Sum of |CC(p, n)| (x1)_p1 (x2)_p2 (x3)_p3 with class sizes from the table."""
    result: PolyElement = TRI_RING.zero
    for p1, p2, p3 in product(range(1, table.n + 1), repeat=3):
        size: int = cc_count_stirling(p1, p2, p3, table.n, table=table)
        if size:
            result += (
                falling_factorial(ell=p1, gen=X1)
                * falling_factorial(ell=p2, gen=X2)
                * falling_factorial(ell=p3, gen=X3)
                * size
            )
    return result


def theorem1_check(n: int, table: MTable | None = None, *, jobs: int = 1, force: bool = False) -> TheoremCheck:
    """Compare the brute-force table with the closed form for size n.

    Args:
    ----
        n (int): Size, at least 1.
        table (MTable | None): Precomputed table for n.
        jobs (int): Worker processes for the brute force.
        force (bool): Ignore the enumeration limit.

    Returns:
    -------
        TheoremCheck: Both sides of both identities.

    Raises:
    ------
        LimitExceededError: If the table must be built and ``n`` exceeds the limit.

    """
    if table is None:
        table = m_bruteforce(n=n, jobs=jobs, force=force)
    check = TheoremCheck(
        n=n,
        lhs=table_polynomial(table=table),
        rhs=theorem1_polynomial(n=n),
        bridge_lhs=table_polynomial(table=table, normalized=False),
        bridge_rhs=bridge_polynomial(table=table),
    )
    if not check.passed:
        LOGGER.error("identity fails for n = %d at monomials %s", n, check.mismatches()[:5])
    return check
