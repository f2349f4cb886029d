"""Verification suites run by ``tricacti verify``.

Each suite yields one ``VerificationReport`` per checked instance, in a fixed order.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor, as_completed
from itertools import product
from math import factorial
from typing import TYPE_CHECKING

from tqdm import tqdm

from tricacti.bijection import enumerate_image, theta_forward, theta_inverse
from tricacti.cactus import enumerate_all_cc
from tricacti.counting import (
    MTable,
    cc_count_stirling,
    i_count_formula,
    i_count_from_trees,
    jackson_symmetric,
    m_bruteforce,
    theorem1_check,
)
from tricacti.schema import ImageTupleModel, PartitionedCactusModel, VerificationReport
from tricacti.tree import TreeProfile, ct_count_formula, enumerate_shapes, flag_assignments, gf_coefficients
from tricacti.utils import LIMITS_CFG, LOGGER, dump_json
from tricacti.utils.limits import progress_enabled, series_limit, tree_limit

if TYPE_CHECKING:
    from collections.abc import Callable, Iterator

SUITES: tuple[str, ...] = ("theorem1", "bijection", "ct", "jackson")


def _triples(n: int) -> Iterator[tuple[int, int, int]]:
    return product(range(1, n + 1), repeat=3)


def theorem1_suite(max_n: int, *, jobs: int = 1, force: bool = False) -> Iterator[VerificationReport]:
    """Polynomial identity and falling-factorial bridge for n = 1..max_n."""
    for n in range(1, max_n + 1):
        check = theorem1_check(n=n, jobs=jobs, force=force)
        yield VerificationReport(
            check="theorem1",
            n=n,
            params={"mismatches": [list(monom) for monom in check.mismatches()[:5]]},
            passed=check.passed,
            lhs=str(check.lhs),
            rhs=str(check.rhs),
        )


LeftCounts = dict[tuple[int, int, int], tuple[int, dict[str, object] | None]]


def _left_round_trips(n: int, first: int, force: bool) -> LeftCounts:  # noqa: FBT001
    """Run cactus round trips for alpha1(1) = first, per block-count triple.

    Returns the number of cacti of each class and the document of its first cactus that does not
    come back. The factorizations are generated by ``enumerate_all_cc``, so validation is skipped.
    """
    counts: Counter[tuple[int, int, int]] = Counter()
    failures: dict[tuple[int, int, int], dict[str, object]] = {}
    for pc in enumerate_all_cc(n, first=first, force=force):
        p: tuple[int, int, int] = pc.p
        counts[p] += 1
        if p not in failures and theta_inverse(theta_forward(pc, check=False), check=False) != pc:
            failures[p] = {"cactus": PartitionedCactusModel.from_domain(pc).model_dump(mode="json")}
    return {p: (count, failures.get(p)) for p, count in counts.items()}


def left_round_trips(n: int, *, jobs: int = 1, force: bool = False) -> LeftCounts:
    """Cactus round trips on n points, split by alpha1(1) and merged additively.

    With ``jobs > 1`` the ranges run in a process pool; the merge follows alpha1(1), so the
    recorded failures do not depend on ``jobs``. A left inverse makes the forward map injective, so
    no image set is kept.
    """
    firsts: list[int] = list(range(1, n + 1))
    show_progress: bool = progress_enabled(total=factorial(n) ** 2)
    parts: dict[int, LeftCounts] = {}
    if jobs <= 1:
        for first in tqdm(firsts, desc=f"cacti n={n}", disable=not show_progress):
            parts[first] = _left_round_trips(n, first, force)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = {pool.submit(_left_round_trips, n, first, force): first for first in firsts}
            for future in tqdm(as_completed(futures), total=n, desc=f"cacti n={n}", disable=not show_progress):
                parts[futures[future]] = future.result()
    merged: LeftCounts = {}
    for first in firsts:
        for p, (count, failure) in parts[first].items():
            total, recorded = merged.get(p, (0, None))
            merged[p] = (total + count, recorded if recorded is not None else failure)
    return merged


def bijection_suite(max_n: int, *, jobs: int = 1, force: bool = False) -> Iterator[VerificationReport]:
    """Round trips in both directions and the three-way class size equality.

    For each n and p: every cactus maps to a tuple and back; the number of cacti equals the
    Stirling-weighted table sum and the closed form. Cacti are split by alpha1(1) across ``jobs``
    processes. For n up to ``enumeration.image_max_n`` every tuple of the image set maps to a cactus
    and back.
    """
    left_cap: int = max_n if force else min(max_n, int(LIMITS_CFG.enumeration["bijection_max_n"]))
    right_cap: int = max_n if force else min(max_n, int(LIMITS_CFG.enumeration["image_max_n"]))
    if left_cap < max_n:
        LOGGER.warning("bijection round trips capped at n = %d; pass --force to go further", left_cap)
    for n in range(1, left_cap + 1):
        table: MTable = m_bruteforce(n=n, jobs=jobs, force=force)
        trips: LeftCounts = left_round_trips(n=n, jobs=jobs, force=force)
        for p1, p2, p3 in _triples(n):
            count, failure = trips.get((p1, p2, p3), (0, None))
            stirling: int = cc_count_stirling(p1, p2, p3, n, table=table)
            formula: int = i_count_formula(p1, p2, p3, n)
            yield VerificationReport(
                check="bijection",
                n=n,
                params={"p": [p1, p2, p3], "direction": "cactus", **(failure or {})},
                passed=failure is None and count == stirling == formula,
                lhs=str(count),
                rhs=f"{stirling} {formula}",
            )
    for n in range(1, right_cap + 1):
        for p1, p2, p3 in _triples(n):
            tuple_failure: dict[str, object] = {}
            count = 0
            for tup in enumerate_image(p1, p2, p3, n):
                count += 1
                if not tuple_failure and theta_forward(theta_inverse(tup, check=False), check=False) != tup:
                    tuple_failure = {
                        "tuple": ImageTupleModel.from_domain(tup).model_dump(mode="json", exclude_none=True),
                    }
            formula = i_count_formula(p1, p2, p3, n)
            yield VerificationReport(
                check="image",
                n=n,
                params={"p": [p1, p2, p3], "direction": "tuple", **tuple_failure},
                passed=not tuple_failure and count == formula,
                lhs=str(count),
                rhs=str(formula),
            )


def ct_suite(max_vertices: int) -> Iterator[VerificationReport]:
    """Tree counts: closed form against enumeration, then the generating function against enumeration."""
    by_profile: Counter[TreeProfile] = Counter()
    for total in range(1, max_vertices + 1):
        for p1 in range(1, total + 1):
            for p2 in range(total - p1 + 1):
                p3: int = total - p1 - p2
                for shape in enumerate_shapes(p1, p2, p3):
                    for _, (a, b, c) in flag_assignments(shape):
                        by_profile[TreeProfile(p1, p2, p3, a, b, c)] += 1
    for pr in sorted(by_profile):
        if min(pr.p1, pr.p2, pr.p3) < 1:
            continue
        formula: int = ct_count_formula(pr)
        yield VerificationReport(
            check="ct",
            n=pr.vertices,
            params={"profile": list(pr)},
            passed=formula == by_profile[pr],
            lhs=str(by_profile[pr]),
            rhs=str(formula),
        )
    series: dict[TreeProfile, int] = gf_coefficients(max_vertices=max_vertices)
    mismatched: list[list[int]] = [
        list(pr) for pr in sorted(set(series) | set(by_profile)) if series.get(pr, 0) != by_profile[pr]
    ]
    yield VerificationReport(
        check="gf",
        n=max_vertices,
        params={"mismatches": mismatched[:5]},
        passed=not mismatched,
        lhs=str(sum(by_profile.values())),
        rhs=str(sum(series.values())),
    )


def _orders(p1: int, p2: int, p3: int) -> set[tuple[int, int, int]]:
    return {(p1, p2, p3), (p1, p3, p2), (p2, p1, p3), (p2, p3, p1), (p3, p1, p2), (p3, p2, p1)}


def jackson_suite(max_n: int) -> Iterator[VerificationReport]:
    """Closed form against the symmetric sum and the sum over tree counts, for all 1 <= p_i <= n."""
    for n in range(1, max_n + 1):
        for p1, p2, p3 in _triples(n):
            formula: int = i_count_formula(p1, p2, p3, n)
            symmetric: set[int] = {jackson_symmetric(*order, n) for order in _orders(p1, p2, p3)}
            trees: int = i_count_from_trees(p1, p2, p3, n)
            yield VerificationReport(
                check="jackson",
                n=n,
                params={"p": [p1, p2, p3]},
                passed=symmetric == {formula} and trees == formula,
                lhs=str(formula),
                rhs=dump_json(data=sorted(symmetric | {trees})),
            )


def suite_runners(
    max_n: int,
    *,
    jobs: int = 1,
    force: bool = False,
) -> dict[str, Callable[[], Iterator[VerificationReport]]]:
    """Suites by name, bound to their parameters."""
    return {
        "theorem1": lambda: theorem1_suite(max_n=max_n, jobs=jobs, force=force),
        "bijection": lambda: bijection_suite(max_n=max_n, jobs=jobs, force=force),
        "ct": lambda: ct_suite(max_vertices=min(max_n + 2, series_limit(), tree_limit())),
        "jackson": lambda: jackson_suite(max_n=max_n),
    }
