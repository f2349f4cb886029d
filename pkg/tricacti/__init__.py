"""Bijective enumeration of factorizations of the long cycle into three permutations."""

from tricacti.algebra import Permutation, SetPartition
from tricacti.bijection import ImageTuple, theta_forward, theta_inverse
from tricacti.cactus import FactorTriple, PartitionedCactus
from tricacti.counting import MTable, i_count_formula, m_bruteforce
from tricacti.tree import CactusTree, Color

__version__: str = "0.1.0"

__all__: list[str] = [
    "CactusTree",
    "Color",
    "FactorTriple",
    "ImageTuple",
    "MTable",
    "PartitionedCactus",
    "Permutation",
    "SetPartition",
    "__version__",
    "i_count_formula",
    "m_bruteforce",
    "theta_forward",
    "theta_inverse",
]
