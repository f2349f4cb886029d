"""Brute-force table of factorization counts M(n1, n2, n3, n) keyed by cycle counts."""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field
from io import StringIO
from itertools import permutations
from math import factorial

import pandas as pd
from tqdm import tqdm

from tricacti.algebra import count_cycles
from tricacti.cactus import PARALLEL_HINT, alpha1_candidates, enumerate_factorizations
from tricacti.utils import LOGGER, dump_json
from tricacti.utils.exception import InputFormatError, InvariantViolationError
from tricacti.utils.limits import check_limit, enumeration_limit, progress_enabled

CycleCounts = tuple[int, int, int]

COLUMNS: list[str] = ["n1", "n2", "n3", "count"]


@dataclass
class MTable:
    """Counts of factorizations of the long cycle by the cycle counts of their three factors.

    Attributes
    ----------
        n (int): Size of the long cycle.
        counts (dict[CycleCounts, int]): Nonzero entries only; missing keys read as 0.

    """

    n: int
    counts: dict[CycleCounts, int] = field(default_factory=dict)

    def __getitem__(self: MTable, key: CycleCounts) -> int:
        """Return M(n1, n2, n3, n), 0 for absent keys."""
        return self.counts.get(key, 0)

    def total(self: MTable) -> int:
        """Sum of all entries; n!^2 for a complete table."""
        return sum(self.counts.values())

    def is_symmetric(self: MTable) -> bool:
        """True when every entry is invariant under permuting (n1, n2, n3)."""
        return all(
            self[(key[i], key[j], key[k])] == value
            for key, value in self.counts.items()
            for i, j, k in permutations(range(3))
        )

    def merge(self: MTable, other: MTable) -> MTable:
        """Add two partial tables of the same size."""
        if other.n != self.n:
            msg: str = f"cannot merge tables for n = {self.n} and n = {other.n}"
            raise InvariantViolationError(message=msg)
        merged: Counter[CycleCounts] = Counter(self.counts)
        merged.update(other.counts)
        return MTable(n=self.n, counts=dict(sorted(merged.items())))

    def to_frame(self: MTable) -> pd.DataFrame:
        """Rows (n1, n2, n3, count) sorted lexicographically; counts kept as Python integers."""
        rows: list[list[int]] = [[*key, value] for key, value in sorted(self.counts.items())]
        return pd.DataFrame(data=rows, columns=COLUMNS, dtype=object)

    def to_csv(self: MTable) -> str:
        """Serialize as CSV with header n1,n2,n3,count."""
        return self.to_frame().to_csv(index=False, lineterminator="\n")

    def to_json(self: MTable) -> str:
        """Serialize as ``{"n": .., "rows": [[n1, n2, n3, count], ..]}``."""
        rows: list[list[int]] = [[*key, value] for key, value in sorted(self.counts.items())]
        return dump_json(data={"n": self.n, "rows": rows})

    @classmethod
    def from_csv(cls: type[MTable], n: int, text: str) -> MTable:
        """Parse the output of ``to_csv``.

        Raises
        ------
            InputFormatError: If a column is missing or a value is not an integer.

        """
        frame: pd.DataFrame = pd.read_csv(StringIO(text), dtype=str)
        missing: list[str] = [column for column in COLUMNS if column not in frame.columns]
        if missing:
            msg: str = f"missing columns: {', '.join(missing)}"
            raise InputFormatError(message=msg)
        counts: dict[CycleCounts, int] = {}
        for row in frame.to_dict(orient="records"):
            try:
                key: CycleCounts = (int(row["n1"]), int(row["n2"]), int(row["n3"]))
                counts[key] = int(row["count"])
            except ValueError as exc:
                msg = f"non-integer value in row {row}"
                raise InputFormatError(message=msg) from exc
        return cls(n=n, counts=counts)


def _count_range(n: int, first: int) -> dict[CycleCounts, int]:
    """Count all factorizations with alpha1(1) = first, working on raw image tuples.

    With beta = alpha1^-1 gamma, alpha3 = alpha2^-1 beta, so each alpha2 costs one composition and
    one cycle count.
    """
    gamma: tuple[int, ...] = (*range(2, n + 1), 1)
    alpha2_inverses: list[tuple[int, ...]] = []
    alpha2_cycles: list[int] = []
    for images in permutations(range(1, n + 1)):
        inverse: list[int] = [0] * n
        for point, image in enumerate(images, start=1):
            inverse[image - 1] = point
        alpha2_inverses.append(tuple(inverse))
        alpha2_cycles.append(count_cycles(images=images))

    counts: Counter[CycleCounts] = Counter()
    for alpha1 in alpha1_candidates(n=n, first=first):
        n1: int = count_cycles(images=alpha1)
        alpha1_inverse: list[int] = [0] * n
        for point, image in enumerate(alpha1, start=1):
            alpha1_inverse[image - 1] = point
        beta: list[int] = [alpha1_inverse[value - 1] for value in gamma]
        for alpha2_inverse, n2 in zip(alpha2_inverses, alpha2_cycles):
            alpha3: list[int] = [alpha2_inverse[value - 1] for value in beta]
            counts[(n1, n2, count_cycles(images=alpha3))] += 1
    return dict(counts)


def m_bruteforce(n: int, *, jobs: int = 1, force: bool = False) -> MTable:
    """Count the n!^2 factorizations of (1 2 ... n) by cycle counts.

    The work is split by the value of alpha1(1); with ``jobs > 1`` the ranges run in a process pool
    and are merged additively, so the table does not depend on ``jobs``.

    Args:
    ----
        n (int): Size, at least 1.
        jobs (int): Worker processes.
        force (bool): Ignore the configured size limit.

    Returns:
    -------
        MTable: The complete table.

    Raises:
    ------
        LimitExceededError: If ``n`` exceeds the limit without ``force``.
        InvariantViolationError: If the counts do not add up to n!^2.

    """
    check_limit(value=n, limit=enumeration_limit(), what="n", force=force, hint=PARALLEL_HINT)
    show_progress: bool = progress_enabled(total=factorial(n) ** 2)
    table = MTable(n=n)
    if n == 0:
        return table
    LOGGER.info("counting %d factorizations for n = %d with %d job(s)", factorial(n) ** 2, n, jobs)
    if jobs <= 1:
        for first in tqdm(range(1, n + 1), desc="alpha1(1)", disable=not show_progress):
            table = table.merge(MTable(n=n, counts=_count_range(n=n, first=first)))
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_count_range, n, first) for first in range(1, n + 1)]
            for future in tqdm(as_completed(futures), total=n, desc="alpha1(1)", disable=not show_progress):
                table = table.merge(MTable(n=n, counts=future.result()))
    if table.total() != factorial(n) ** 2:
        msg: str = f"table for n = {n} sums to {table.total()}, expected {factorial(n) ** 2}"
        raise InvariantViolationError(message=msg)
    return table


def genus_distribution(table: MTable) -> dict[int, int]:
    """Number of factorizations of each genus, g = (2n + 1 - n1 - n2 - n3) / 2."""
    by_genus: Counter[int] = Counter()
    for (n1, n2, n3), value in table.counts.items():
        twice: int = 2 * table.n + 1 - n1 - n2 - n3
        if twice < 0 or twice % 2:
            msg: str = f"cycle counts {(n1, n2, n3)} give no genus for n = {table.n}"
            raise InvariantViolationError(message=msg)
        by_genus[twice // 2] += value
    return dict(sorted(by_genus.items()))


def m_from_factorizations(n: int, *, force: bool = False) -> MTable:
    """Slow reference: the same table built from ``enumerate_factorizations`` objects."""
    counts: Counter[CycleCounts] = Counter(
        triple.cycle_counts() for triple in enumerate_factorizations(n=n, force=force)
    )
    return MTable(n=n, counts=dict(sorted(counts.items())))
