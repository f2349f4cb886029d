from .numbers import binomial, multinomial, stirling2, trinomial
from .partition import SetPartition, cycle_partitions
from .permutation import Permutation, compose, compose_all, count_cycles, cycles
from .polynomial import X, X_RING, PolynomialCheck, binom_poly, binomial_poly_eval_check, falling_factorial
from .series import TruncatedSeries, Truncation, add_series, mul_series, reciprocal

__all__: list[str] = [
    "X",
    "X_RING",
    "Permutation",
    "PolynomialCheck",
    "SetPartition",
    "TruncatedSeries",
    "Truncation",
    "add_series",
    "binom_poly",
    "binomial",
    "binomial_poly_eval_check",
    "compose",
    "compose_all",
    "count_cycles",
    "cycle_partitions",
    "cycles",
    "falling_factorial",
    "mul_series",
    "multinomial",
    "reciprocal",
    "stirling2",
    "trinomial",
]
