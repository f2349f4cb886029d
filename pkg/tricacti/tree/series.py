"""Generating function of cactus trees by fixed-point iteration.

Variables are (x1, x2, x3, y1, y2, y3): x counts vertices per colour; y1, y2, y3 count
flagged white, black and grey vertices (triangles rooted in grey, white and black).

    W = x1 / (1 - B (1 + G y2))
    B = x2 / (1 - G (1 + W y3))
    G = x3 / (1 - W (1 + B y1))
"""

from __future__ import annotations

from typing import TYPE_CHECKING

from tricacti.algebra import TruncatedSeries, Truncation
from tricacti.utils import LOGGER
from tricacti.utils.exception import InvariantViolationError, SeriesError
from tricacti.utils.limits import series_limit

from .base import TreeProfile

if TYPE_CHECKING:
    from collections.abc import Sequence

VERTEX_WEIGHTS: tuple[int, ...] = (1, 1, 1, 0, 0, 0)


def tree_truncation(max_vertices: int, caps: Sequence[int] | None = None) -> Truncation:
    """Truncation keeping monomials with at most ``max_vertices`` vertices.

    Raises
    ------
        SeriesError: If ``max_vertices`` is beyond the configured ``series.max_degree``.

    """
    if max_vertices > series_limit():
        msg: str = f"vertex degree {max_vertices} exceeds the series budget {series_limit()}"
        raise SeriesError(message=msg)
    resolved: tuple[int, ...] = tuple(caps) if caps is not None else (max_vertices,) * 6
    if len(resolved) != len(VERTEX_WEIGHTS):
        msg = f"expected 6 caps, got {len(resolved)}"
        raise SeriesError(message=msg)
    return Truncation(caps=resolved, weights=VERTEX_WEIGHTS, degree_cap=max_vertices)


def _step(
    truncation: Truncation,
    w: TruncatedSeries,
    b: TruncatedSeries,
    g: TruncatedSeries,
) -> tuple[TruncatedSeries, TruncatedSeries, TruncatedSeries]:
    x1, x2, x3, y1, y2, y3 = (TruncatedSeries.variable(truncation=truncation, index=i) for i in range(6))
    new_w = x1 * (1 - b * (1 + g * y2)).reciprocal()
    new_b = x2 * (1 - g * (1 + w * y3)).reciprocal()
    new_g = x3 * (1 - w * (1 + b * y1)).reciprocal()
    return new_w, new_b, new_g


def solve_fixed_point(truncation: Truncation) -> tuple[TruncatedSeries, TruncatedSeries, TruncatedSeries]:
    """Iterate the three equations from zero until they stabilize, then verify one extra step.

    Raises
    ------
        InvariantViolationError: If the series do not stabilize within sum(caps) + 1 steps.

    """
    zero: TruncatedSeries = TruncatedSeries(truncation=truncation)
    current = (zero, zero, zero)
    for iteration in range(truncation.max_order() + 1):
        following = _step(truncation, *current)
        if following == current:
            LOGGER.debug("cactus tree series stabilized after %d iterations", iteration)
            break
        current = following
    else:
        msg: str = "cactus tree series did not stabilize"
        raise InvariantViolationError(message=msg)
    if _step(truncation, *current) != current:
        msg = "cactus tree series changed after stabilizing"
        raise InvariantViolationError(message=msg)
    return current


def gf_coefficients(max_vertices: int, caps: Sequence[int] | None = None) -> dict[TreeProfile, int]:
    """Coefficients of W, keyed by profile, for trees with at most ``max_vertices`` vertices.

    Args:
    ----
        max_vertices (int): Bound on p1 + p2 + p3.
        caps (Sequence[int] | None): Optional per-variable caps on (x1, x2, x3, y1, y2, y3).

    Returns:
    -------
        dict[TreeProfile, int]: Nonzero coefficients; the value at (p1, p2, p3, a, b, c) is the
            number of cactus trees with that profile.

    """
    truncation: Truncation = tree_truncation(max_vertices=max_vertices, caps=caps)
    white, _, _ = solve_fixed_point(truncation=truncation)
    result: dict[TreeProfile, int] = {}
    for (p1, p2, p3, y1, y2, y3), value in sorted(white.coefficients.items()):
        if value.denominator != 1:
            msg: str = f"non-integral coefficient {value}"
            raise InvariantViolationError(message=msg)
        result[TreeProfile(p1=p1, p2=p2, p3=p3, a=y1, b=y2, c=y3)] = int(value)
    return result
