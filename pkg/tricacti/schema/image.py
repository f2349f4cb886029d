"""JSON model of an element of the image set."""

from __future__ import annotations

from pydantic import BaseModel, Field, field_validator, model_validator

from tricacti.algebra import Permutation
from tricacti.bijection import ImageTuple
from tricacti.tree import TreeProfile, profile

from .base import convert
from .tree import CactusTreeModel


class ImageTupleModel(BaseModel):
    """Document ``{"n", "p", "tree", "s0", "s1", "s2", "chi", "sigma1", "sigma2"}``.

    Sets are ascending arrays, ``chi`` keeps its order and permutations are in one-line form.
    """

    n: int = Field(default=..., ge=1, description="Size.")
    p: list[int] = Field(default=..., description="Block counts (p1, p2, p3).")
    tree: CactusTreeModel = Field(default=..., description="The cactus tree.")
    s0: list[int] = Field(default=..., description="Images of the white and black marker values.")
    s1: list[int] = Field(default=..., description="Grey-own white markers, including n.")
    s2: list[int] = Field(default=..., description="Black-own grey markers, including n.")
    chi: list[int] = Field(default=..., description="Images of the unflagged grey last passages.")
    sigma1: list[int] = Field(default_factory=list, description="Residual permutation on the alpha1 side.")
    sigma2: list[int] = Field(default_factory=list, description="Residual permutation on the alpha2 side.")

    @field_validator("s0", "s1", "s2")
    def validate_ascending(cls: ImageTupleModel, v: list[int]) -> list[int]:  # noqa: N805
        """Sets must be strictly ascending."""
        if any(left >= right for left, right in zip(v, v[1:])):
            msg = f"set must be strictly ascending, got {v}"
            raise ValueError(msg)
        return v

    @field_validator("p")
    def validate_p(cls: ImageTupleModel, v: list[int]) -> list[int]:  # noqa: N805
        """Exactly three block counts."""
        if len(v) != 3:  # noqa: PLR2004
            msg = f"p must have three entries, got {v}"
            raise ValueError(msg)
        return v

    @model_validator(mode="after")
    def validate_p_matches_tree(self: ImageTupleModel) -> ImageTupleModel:
        """The echoed block counts must be the tree's colour counts."""
        pr: TreeProfile = profile(self.tree.to_domain())
        tree_p: list[int] = [pr.p1, pr.p2, pr.p3]
        if tree_p != self.p:
            msg = f"p = {self.p} but the tree has colour counts {tree_p}"
            raise ValueError(msg)
        return self

    def to_domain(self: ImageTupleModel) -> ImageTuple:
        """Build the domain tuple; membership and size rules are checked by ``validate_image``."""
        return ImageTuple(
            n=self.n,
            tree=self.tree.to_domain(),
            s0=tuple(self.s0),
            s1=tuple(self.s1),
            s2=tuple(self.s2),
            chi=tuple(self.chi),
            sigma1=convert("sigma1", lambda: Permutation(images=tuple(self.sigma1))),
            sigma2=convert("sigma2", lambda: Permutation(images=tuple(self.sigma2))),
        )

    @classmethod
    def from_domain(cls: type[ImageTupleModel], tup: ImageTuple) -> ImageTupleModel:
        """Serialize ``tup``."""
        return cls(
            n=tup.n,
            p=list(tup.p),
            tree=CactusTreeModel.from_domain(tup.tree, with_profile=True),
            s0=list(tup.s0),
            s1=list(tup.s1),
            s2=list(tup.s2),
            chi=list(tup.chi),
            sigma1=tup.sigma1.to_list(),
            sigma2=tup.sigma2.to_list(),
        )
