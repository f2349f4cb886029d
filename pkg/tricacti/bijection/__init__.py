from .enumerate import enumerate_image
from .forward import ForwardResult, theta_forward, trace_forward
from .image import ImageSizes, ImageTuple, validate_image
from .inverse import InverseResult, resolve_markers, theta_inverse, trace_inverse
from .labeled import LabeledTree, LabeledVertex, attach_triangles, build_labeled_tree, is_branch_monotone
from .relabel import Relabeling, relabel_from_string, relabelings, reverse_labels
from .support import (
    ForwardTrace,
    MarkerImages,
    SupportSets,
    marker_images,
    relabeled_markers,
    sigma_permutations,
    support_sets,
)

__all__: list[str] = [
    "ForwardResult",
    "ForwardTrace",
    "ImageSizes",
    "ImageTuple",
    "InverseResult",
    "LabeledTree",
    "LabeledVertex",
    "MarkerImages",
    "Relabeling",
    "SupportSets",
    "attach_triangles",
    "build_labeled_tree",
    "enumerate_image",
    "is_branch_monotone",
    "marker_images",
    "relabel_from_string",
    "relabeled_markers",
    "relabelings",
    "resolve_markers",
    "reverse_labels",
    "sigma_permutations",
    "support_sets",
    "theta_forward",
    "theta_inverse",
    "trace_forward",
    "trace_inverse",
    "validate_image",
]
