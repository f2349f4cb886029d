"""Falling factorials and binomial polynomials over QQ, built on sympy's sparse polynomial rings."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial

from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement, ring

from tricacti.utils.limits import check_limit, poly_cap

from .numbers import stirling2

X_RING, X = ring("x", QQ)


def falling_factorial(ell: int, gen: PolyElement = X) -> PolyElement:
    """Return (x)_ell = x (x - 1) ... (x - ell + 1) in the ring of ``gen``; (x)_0 = 1."""
    result: PolyElement = gen.ring.one
    for offset in range(ell):
        result *= gen - offset
    return result


def binom_poly(p: int, gen: PolyElement = X) -> PolyElement:
    """Return binom(x, p) = (x)_p / p! as a polynomial with rational coefficients."""
    return falling_factorial(ell=p, gen=gen) * QQ(1, factorial(p))


@dataclass
class PolynomialCheck:
    """Outcome of the Stirling / falling-factorial identity for one exponent."""

    a: int
    lhs: PolyElement
    rhs: PolyElement
    evaluations: dict[int, tuple[int, int]] = field(default_factory=dict)

    @property
    def passed(self: PolynomialCheck) -> bool:
        """True when the polynomials and all integer evaluations agree."""
        return self.lhs == self.rhs and all(left == right for left, right in self.evaluations.values())


def binomial_poly_eval_check(a: int, *, cap: int | None = None) -> PolynomialCheck:
    """Check that sum over b of S(a, b) (x)_b equals x^a.

    The identity is compared coefficient-wise and also by evaluation at x = 1..a+1.

    Args:
    ----
        a (int): Exponent, nonnegative.
        cap (int | None): Largest accepted ``a``; the configured ``algebra.poly_cap`` by default.

    Returns:
    -------
        PolynomialCheck: Both sides and the evaluation table.

    Raises:
    ------
        LimitExceededError: If ``a`` exceeds the cap.

    """
    check_limit(value=a, limit=poly_cap() if cap is None else cap, what="exponent a")
    lhs: PolyElement = X_RING.zero
    for b in range(a + 1):
        lhs += falling_factorial(ell=b) * stirling2(a, b)
    rhs: PolyElement = X**a
    evaluations: dict[int, tuple[int, int]] = {
        point: (int(lhs(point)), point**a) for point in range(1, a + 2)
    }
    return PolynomialCheck(a=a, lhs=lhs, rhs=rhs, evaluations=evaluations)
