"""JSON model of a cactus tree, nested one object per vertex."""

from __future__ import annotations

from pydantic import BaseModel, Field, model_validator

from tricacti.tree import CactusTree, Color, TreeProfile, TreeViolation, profile, validate_tree


class CactusTreeModel(BaseModel):
    """Vertex document ``{"color", "flag", "children", "profile"}``.

    ``profile`` is optional and only read on the root; when present it must match the tree.
    """

    color: Color = Field(default=..., description="white, black or grey.")
    flag: bool = Field(default=False, description="Whether the vertex carries a triangle.")
    children: list[CactusTreeModel] = Field(default_factory=list, description="Subtrees, left to right.")
    profile: list[int] | None = Field(default=None, description="(p1, p2, p3, a, b, c) echoed for validation.")

    @model_validator(mode="after")
    def validate_profile(self: CactusTreeModel) -> CactusTreeModel:
        """Check the echoed profile against the tree it heads."""
        if self.profile is None:
            return self
        actual: TreeProfile = profile(self.to_domain())
        if list(actual) != self.profile:
            msg = f"profile header {self.profile} does not match the tree's profile {list(actual)}"
            raise ValueError(msg)
        return self

    def to_domain(self: CactusTreeModel) -> CactusTree:
        """Build the immutable tree; colouring rules are checked by ``validate_tree``."""
        return CactusTree(
            color=self.color,
            children=tuple(child.to_domain() for child in self.children),
            flag=self.flag,
        )

    def violation(self: CactusTreeModel) -> TreeViolation | None:
        """First colouring or flag violation of the tree, if any."""
        return validate_tree(self.to_domain())

    @classmethod
    def from_domain(cls: type[CactusTreeModel], tree: CactusTree, *, with_profile: bool = False) -> CactusTreeModel:
        """Serialize ``tree``; ``with_profile`` adds the header on the root."""
        return cls(
            color=tree.color,
            flag=tree.flag,
            children=[cls.from_domain(child) for child in tree.children],
            profile=list(profile(tree)) if with_profile else None,
        )


CactusTreeModel.model_rebuild()
