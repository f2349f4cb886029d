from .base import CactusTree, Color, TreeProfile, TreeViolation, profile, validate_tree
from .enumerate import enumerate_ct, enumerate_shapes, flag_assignments
from .formula import ct_count_formula
from .series import gf_coefficients, solve_fixed_point, tree_truncation

__all__: list[str] = [
    "CactusTree",
    "Color",
    "TreeProfile",
    "TreeViolation",
    "ct_count_formula",
    "enumerate_ct",
    "enumerate_shapes",
    "flag_assignments",
    "gf_coefficients",
    "profile",
    "solve_fixed_point",
    "tree_truncation",
    "validate_tree",
]
