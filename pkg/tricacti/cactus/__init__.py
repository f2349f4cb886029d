from .dot import export_dot
from .enumerate import PARALLEL_HINT, alpha1_candidates, enumerate_all_cc, enumerate_cc, enumerate_factorizations
from .partitioned import (
    CactusViolation,
    MarkerSet,
    PartitionedCactus,
    black_labels,
    block_markers,
    grey_labels,
    markers,
    traversal_labels,
    validate,
)
from .triple import FactorTriple, derive_alpha3, genus, make_factor_triple

__all__: list[str] = [
    "PARALLEL_HINT",
    "CactusViolation",
    "FactorTriple",
    "MarkerSet",
    "PartitionedCactus",
    "alpha1_candidates",
    "black_labels",
    "block_markers",
    "derive_alpha3",
    "enumerate_all_cc",
    "enumerate_cc",
    "enumerate_factorizations",
    "export_dot",
    "genus",
    "grey_labels",
    "make_factor_triple",
    "markers",
    "traversal_labels",
    "validate",
]
