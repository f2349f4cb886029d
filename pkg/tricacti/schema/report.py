"""Verification report lines."""

from __future__ import annotations

from typing import Any

from pydantic import BaseModel, ConfigDict, Field

from tricacti.utils import dump_json


class VerificationReport(BaseModel):
    """One checked identity: ``{"check", "n", "params", "pass", "lhs", "rhs"}``.

    Attributes
    ----------
        check (str): Name of the identity, e.g. ``"jackson"``.
        n (int): Size.
        params (dict[str, Any]): Further parameters such as block counts.
        passed (bool): Serialized as ``pass``.
        lhs (str): Left side, rendered as text.
        rhs (str): Right side, rendered as text.

    """

    model_config = ConfigDict(populate_by_name=True)

    check: str = Field(default=..., description="Name of the checked identity.")
    n: int = Field(default=..., description="Size.")
    params: dict[str, Any] = Field(default_factory=dict, description="Further parameters.")
    passed: bool = Field(default=..., alias="pass", description="Whether both sides agree.")
    lhs: str = Field(default="", description="Left side.")
    rhs: str = Field(default="", description="Right side.")

    def to_json(self: VerificationReport) -> str:
        """One JSON line with sorted keys."""
        return dump_json(data=self.model_dump(by_alias=True))
