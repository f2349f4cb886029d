"""Multivariate truncated power series with exact rational coefficients.

A series is a sparse mapping from exponent vectors to ``Fraction`` coefficients. Every
stored exponent respects the per-variable caps and, when given, a weighted degree cap
``sum(weights[i] * e[i]) <= degree_cap``. Products drop all terms beyond the truncation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from operator import add
from typing import TYPE_CHECKING

from tricacti.utils.exception import SeriesError

if TYPE_CHECKING:
    from collections.abc import Mapping, Sequence

Exponent = tuple[int, ...]


@dataclass(frozen=True)
class Truncation:
    """Shape shared by all operands of an operation."""

    caps: tuple[int, ...]
    weights: tuple[int, ...] | None = None
    degree_cap: int | None = None

    @property
    def nvars(self: Truncation) -> int:
        """Variable count."""
        return len(self.caps)

    def weight(self: Truncation, exponent: Exponent) -> int:
        """Weighted degree of ``exponent``; 0 when no weights are set."""
        if self.weights is None:
            return 0
        return sum(w * e for w, e in zip(self.weights, exponent))

    def admits(self: Truncation, exponent: Exponent) -> bool:
        """True when ``exponent`` survives the truncation."""
        if any(e > cap for e, cap in zip(exponent, self.caps)):
            return False
        return self.degree_cap is None or self.weight(exponent) <= self.degree_cap

    def max_order(self: Truncation) -> int:
        """Upper bound on the total degree of any stored monomial."""
        return sum(self.caps)


@dataclass(frozen=True)
class TruncatedSeries:
    """Exact truncated multivariate series.

    Attributes
    ----------
        truncation (Truncation): Caps shared with every operand.
        coefficients (dict[Exponent, Fraction]): Nonzero coefficients only.

    """

    truncation: Truncation
    coefficients: dict[Exponent, Fraction] = field(default_factory=dict)

    def __post_init__(self: TruncatedSeries) -> None:
        """Drop zeros and everything beyond the truncation."""
        cleaned: dict[Exponent, Fraction] = {}
        for exponent, value in self.coefficients.items():
            if len(exponent) != self.truncation.nvars:
                msg: str = f"exponent {exponent} has the wrong number of variables"
                raise SeriesError(message=msg)
            coefficient = Fraction(value)
            if coefficient and self.truncation.admits(exponent):
                cleaned[tuple(exponent)] = coefficient
        object.__setattr__(self, "coefficients", cleaned)

    @classmethod
    def constant(cls: type[TruncatedSeries], truncation: Truncation, value: int | Fraction) -> TruncatedSeries:
        """Return the constant series ``value``."""
        return cls(truncation=truncation, coefficients={(0,) * truncation.nvars: Fraction(value)})

    @classmethod
    def variable(cls: type[TruncatedSeries], truncation: Truncation, index: int) -> TruncatedSeries:
        """Return the monomial of degree one in variable ``index`` (0-based)."""
        exponent: list[int] = [0] * truncation.nvars
        exponent[index] = 1
        return cls(truncation=truncation, coefficients={tuple(exponent): Fraction(1)})

    @classmethod
    def from_terms(
        cls: type[TruncatedSeries],
        truncation: Truncation,
        terms: Mapping[Exponent, int | Fraction],
    ) -> TruncatedSeries:
        """Build a series from an exponent to coefficient mapping."""
        return cls(truncation=truncation, coefficients={tuple(k): Fraction(v) for k, v in terms.items()})

    def __getitem__(self: TruncatedSeries, exponent: Sequence[int]) -> Fraction:
        """Coefficient of ``exponent``, zero when absent."""
        return self.coefficients.get(tuple(exponent), Fraction(0))

    def __eq__(self: TruncatedSeries, other: object) -> bool:
        """Series are equal when truncations and coefficients agree."""
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.truncation == other.truncation and self.coefficients == other.coefficients

    def __hash__(self: TruncatedSeries) -> int:
        """Hash by truncation and sorted coefficients."""
        return hash((self.truncation, tuple(sorted(self.coefficients.items()))))

    def __add__(self: TruncatedSeries, other: TruncatedSeries | int) -> TruncatedSeries:
        """Coefficient-wise sum."""
        return add_series(self, self._coerce(other))

    __radd__ = __add__

    def __neg__(self: TruncatedSeries) -> TruncatedSeries:
        """Negate every coefficient."""
        return TruncatedSeries(truncation=self.truncation, coefficients={k: -v for k, v in self.coefficients.items()})

    def __sub__(self: TruncatedSeries, other: TruncatedSeries | int) -> TruncatedSeries:
        """Coefficient-wise difference."""
        return add_series(self, -self._coerce(other))

    def __rsub__(self: TruncatedSeries, other: int) -> TruncatedSeries:
        """``other - self`` for a scalar ``other``."""
        return add_series(self._coerce(other), -self)

    def __mul__(self: TruncatedSeries, other: TruncatedSeries | int) -> TruncatedSeries:
        """Truncated product."""
        return mul_series(self, self._coerce(other))

    __rmul__ = __mul__

    def is_zero(self: TruncatedSeries) -> bool:
        """True when no coefficient survives."""
        return not self.coefficients

    def reciprocal(self: TruncatedSeries) -> TruncatedSeries:
        """Return r with trunc(self * r) = 1; see :func:`reciprocal`."""
        return reciprocal(self)

    def _coerce(self: TruncatedSeries, other: TruncatedSeries | int) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            return other
        return TruncatedSeries.constant(truncation=self.truncation, value=other)


def _check_shape(left: TruncatedSeries, right: TruncatedSeries) -> None:
    if left.truncation != right.truncation:
        msg: str = f"cap mismatch: {left.truncation} vs {right.truncation}"
        raise SeriesError(message=msg)


def add_series(left: TruncatedSeries, right: TruncatedSeries) -> TruncatedSeries:
    """Return ``left + right``.

    Raises
    ------
        SeriesError: On a cap mismatch.

    """
    _check_shape(left, right)
    total: dict[Exponent, Fraction] = dict(left.coefficients)
    for exponent, value in right.coefficients.items():
        total[exponent] = total.get(exponent, Fraction(0)) + value
    return TruncatedSeries(truncation=left.truncation, coefficients=total)


def mul_series(left: TruncatedSeries, right: TruncatedSeries) -> TruncatedSeries:
    """Return the truncated product ``left * right``.

    Right-hand terms are bucketed by weighted degree so pairs beyond the degree cap are
    skipped without being formed.

    Raises
    ------
        SeriesError: On a cap mismatch.

    """
    _check_shape(left, right)
    truncation: Truncation = left.truncation
    buckets: dict[int, list[tuple[Exponent, Fraction]]] = {}
    for exponent, value in right.coefficients.items():
        buckets.setdefault(truncation.weight(exponent), []).append((exponent, value))
    product: dict[Exponent, Fraction] = {}
    for exp1, val1 in left.coefficients.items():
        budget: int | None = None
        if truncation.degree_cap is not None:
            budget = truncation.degree_cap - truncation.weight(exp1)
        for degree, terms in buckets.items():
            if budget is not None and degree > budget:
                continue
            for exp2, val2 in terms:
                exponent: Exponent = tuple(map(add, exp1, exp2))
                if any(e > cap for e, cap in zip(exponent, truncation.caps)):
                    continue
                product[exponent] = product.get(exponent, Fraction(0)) + val1 * val2
    return TruncatedSeries(truncation=truncation, coefficients=product)


def reciprocal(series: TruncatedSeries) -> TruncatedSeries:
    """Return the truncated inverse of ``series``.

    With c the constant term and u = series / c - 1, the inverse is (1/c) sum (-u)^k; u has no
    constant term, so the sum stops once a power vanishes under the truncation.

    Raises
    ------
        SeriesError: If the constant term is zero.

    """
    truncation: Truncation = series.truncation
    constant: Fraction = series[(0,) * truncation.nvars]
    if not constant:
        msg: str = "reciprocal of a series with zero constant term"
        raise SeriesError(message=msg)
    scaled = TruncatedSeries(
        truncation=truncation,
        coefficients={k: v / constant for k, v in series.coefficients.items()},
    )
    minus_u: TruncatedSeries = 1 - scaled
    result: TruncatedSeries = TruncatedSeries.constant(truncation=truncation, value=1)
    power: TruncatedSeries = result
    for _ in range(truncation.max_order()):
        power = power * minus_u
        if power.is_zero():
            break
        result = result + power
    return TruncatedSeries(
        truncation=truncation,
        coefficients={k: v / constant for k, v in result.coefficients.items()},
    )
