"""Factorizations of the long cycle into three permutations."""

from __future__ import annotations

from dataclasses import dataclass

from tricacti.algebra import Permutation, compose_all
from tricacti.utils.exception import DegreeMismatchError, InvariantViolationError


@dataclass(frozen=True)
class FactorTriple:
    """A triple with alpha1 * alpha2 * alpha3 = (1 2 ... n)."""

    alpha1: Permutation
    alpha2: Permutation
    alpha3: Permutation

    @property
    def n(self: FactorTriple) -> int:
        """Ground-set size."""
        return self.alpha1.n

    def cycle_counts(self: FactorTriple) -> tuple[int, int, int]:
        """Cycle counts (n1, n2, n3) of the three factors."""
        return (self.alpha1.cycle_count(), self.alpha2.cycle_count(), self.alpha3.cycle_count())

    def is_factorization(self: FactorTriple) -> bool:
        """True when the product invariant holds."""
        return compose_all(self.alpha1, self.alpha2, self.alpha3) == Permutation.long_cycle(self.n)


def derive_alpha3(alpha1: Permutation, alpha2: Permutation) -> Permutation:
    """Return alpha2^-1 alpha1^-1 gamma_n, the unique completion of (alpha1, alpha2)."""
    if alpha1.n != alpha2.n:
        msg: str = f"incompatible degrees: {alpha1.n} and {alpha2.n}"
        raise DegreeMismatchError(message=msg)
    return compose_all(alpha2.inverse(), alpha1.inverse(), Permutation.long_cycle(alpha1.n))


def make_factor_triple(alpha1: Permutation, alpha2: Permutation) -> FactorTriple:
    """Complete ``(alpha1, alpha2)`` to a factorization of the long cycle.

    Raises
    ------
        DegreeMismatchError: If the degrees differ.

    """
    return FactorTriple(alpha1=alpha1, alpha2=alpha2, alpha3=derive_alpha3(alpha1=alpha1, alpha2=alpha2))


def genus(triple: FactorTriple) -> int:
    """Genus of the cactus map from Euler's formula.

    V = n1 + n2 + n3 coloured vertices, E = 3N, F = N + 1, so g = (2N + 1 - n1 - n2 - n3) / 2.

    Raises
    ------
        InvariantViolationError: If g is odd-numerated or negative; impossible for a factorization.

    """
    twice: int = 2 * triple.n + 1 - sum(triple.cycle_counts())
    if twice < 0 or twice % 2:
        msg: str = f"non-integral or negative genus for cycle counts {triple.cycle_counts()}"
        raise InvariantViolationError(message=msg)
    return twice // 2
