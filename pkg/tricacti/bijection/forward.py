"""The forward map from partitioned cacti to image tuples."""

from __future__ import annotations

from dataclasses import dataclass

from tricacti.cactus import CactusViolation, MarkerSet, PartitionedCactus, validate
from tricacti.tree import CactusTree
from tricacti.utils.exception import InvalidCactusError

from .image import ImageTuple, validate_image
from .labeled import LabeledTree, attach_triangles, build_labeled_tree
from .relabel import Relabeling, relabelings
from .support import ForwardTrace, SupportSets, relabeled_markers, sigma_permutations, support_sets


@dataclass(frozen=True)
class ForwardResult:
    """Image tuple with every intermediate object of its construction."""

    image: ImageTuple
    labeled: LabeledTree
    relabeling: Relabeling
    markers: MarkerSet
    supports: SupportSets
    trace: ForwardTrace


def trace_forward(pc: PartitionedCactus, *, check: bool = True) -> ForwardResult:
    """Run the forward construction and keep its intermediates.

    With ``check=False`` the input and output validations are skipped; use it only for cacti that
    come from ``enumerate_cc`` or ``enumerate_all_cc``.

    Raises
    ------
        InvalidCactusError: If ``pc`` violates its stability invariants.

    """
    if check:
        violation: CactusViolation | None = validate(pc)
        if violation is not None:
            msg: str = f"invalid partitioned cactus: {violation.message}"
            raise InvalidCactusError(message=msg)
    labeled: LabeledTree = build_labeled_tree(pc)
    tree: CactusTree = attach_triangles(labeled=labeled, pc=pc)
    relabeling: Relabeling = relabelings(pc=pc, labeled=labeled)
    mk: MarkerSet = relabeled_markers(pc=pc, relabeling=relabeling)
    supports: SupportSets = support_sets(pc=pc, relabeling=relabeling, mk=mk)
    sigma1, sigma2, trace = sigma_permutations(pc=pc, relabeling=relabeling, mk=mk)
    image = ImageTuple(
        n=pc.n,
        tree=tree,
        s0=supports.s0,
        s1=supports.s1,
        s2=supports.s2,
        chi=supports.chi,
        sigma1=sigma1,
        sigma2=sigma2,
    )
    if check:
        validate_image(image)
    return ForwardResult(
        image=image,
        labeled=labeled,
        relabeling=relabeling,
        markers=mk,
        supports=supports,
        trace=trace,
    )


def theta_forward(pc: PartitionedCactus, *, check: bool = True) -> ImageTuple:
    """Map a partitioned cactus to its image tuple."""
    return trace_forward(pc, check=check).image
