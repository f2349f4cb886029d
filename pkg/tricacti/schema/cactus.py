"""JSON model of a partitioned cactus."""

from __future__ import annotations

from pydantic import BaseModel, Field, field_validator, model_validator

from tricacti.algebra import Permutation, SetPartition
from tricacti.cactus import FactorTriple, PartitionedCactus, make_factor_triple
from tricacti.utils.exception import InputFormatError

from .base import convert


class PartitionedCactusModel(BaseModel):
    """Document ``{"n", "alpha1", "alpha2", "pi1", "pi2", "pi3", "root_block_hint"}``.

    Attributes
    ----------
        n (int): Ground-set size.
        alpha1 (list[int]): One-line form of alpha1.
        alpha2 (list[int]): One-line form of alpha2.
        pi1 (list[list[int]]): Blocks of pi1.
        pi2 (list[list[int]]): Blocks of pi2.
        pi3 (list[list[int]]): Blocks of pi3.
        root_block_hint (int | None): Position in ``pi1`` of the block containing 1.

    """

    n: int = Field(default=..., ge=1, description="Size of the long cycle.")
    alpha1: list[int] = Field(default=..., description="alpha1 in one-line form.")
    alpha2: list[int] = Field(default=..., description="alpha2 in one-line form.")
    pi1: list[list[int]] = Field(default=..., description="Partition of the alpha1 cycles, as point blocks.")
    pi2: list[list[int]] = Field(default=..., description="Partition of the alpha2 cycles, as point blocks.")
    pi3: list[list[int]] = Field(default=..., description="Partition of the alpha3 cycles, as point blocks.")
    root_block_hint: int | None = Field(default=None, description="Index of the pi1 block containing 1.")

    @field_validator("alpha1", "alpha2")
    def validate_length(cls: PartitionedCactusModel, v: list[int]) -> list[int]:  # noqa: N805
        """Reject empty one-line forms."""
        if not v:
            msg = "permutation must not be empty"
            raise ValueError(msg)
        return v

    @model_validator(mode="after")
    def validate_hint(self: PartitionedCactusModel) -> PartitionedCactusModel:
        """Check that the hinted block exists and contains 1."""
        hint: int | None = self.root_block_hint
        if hint is not None and (not 0 <= hint < len(self.pi1) or 1 not in self.pi1[hint]):
            msg = f"root_block_hint {hint} does not point at the pi1 block containing 1"
            raise ValueError(msg)
        return self

    def to_domain(self: PartitionedCactusModel) -> PartitionedCactus:
        """Build the domain object; the cactus axioms are checked separately by ``validate``.

        Raises
        ------
            InputFormatError: If a permutation, partition or degree is malformed.

        """
        alpha1 = convert("alpha1", lambda: Permutation(images=tuple(self.alpha1)))
        alpha2 = convert("alpha2", lambda: Permutation(images=tuple(self.alpha2)))
        pi1 = convert("pi1", lambda: SetPartition.from_blocks(blocks=self.pi1, n=self.n))
        pi2 = convert("pi2", lambda: SetPartition.from_blocks(blocks=self.pi2, n=self.n))
        pi3 = convert("pi3", lambda: SetPartition.from_blocks(blocks=self.pi3, n=self.n))
        return convert(
            "n",
            lambda: PartitionedCactus(alpha1=alpha1, alpha2=alpha2, pi1=pi1, pi2=pi2, pi3=pi3),
        )

    @classmethod
    def from_domain(cls: type[PartitionedCactusModel], pc: PartitionedCactus) -> PartitionedCactusModel:
        """Serialize with canonical block order; the block containing 1 is always first."""
        return cls(
            n=pc.n,
            alpha1=pc.alpha1.to_list(),
            alpha2=pc.alpha2.to_list(),
            pi1=pc.pi1.to_list(),
            pi2=pc.pi2.to_list(),
            pi3=pc.pi3.to_list(),
            root_block_hint=0,
        )


class FactorizationModel(BaseModel):
    """Document ``{"n", "alpha1", "alpha2"}``; partitioned cactus documents also parse as one."""

    n: int = Field(default=..., ge=1, description="Size of the long cycle.")
    alpha1: list[int] = Field(default=..., description="alpha1 in one-line form.")
    alpha2: list[int] = Field(default=..., description="alpha2 in one-line form.")

    def to_domain(self: FactorizationModel) -> FactorTriple:
        """Complete (alpha1, alpha2) to a factorization.

        Raises
        ------
            InputFormatError: If a permutation is malformed or has the wrong degree.

        """
        alpha1 = convert("alpha1", lambda: Permutation(images=tuple(self.alpha1)))
        alpha2 = convert("alpha2", lambda: Permutation(images=tuple(self.alpha2)))
        if alpha1.n != self.n:
            msg = f"field alpha1: degree {alpha1.n} differs from n = {self.n}"
            raise InputFormatError(message=msg)
        return convert("alpha2", lambda: make_factor_triple(alpha1=alpha1, alpha2=alpha2))

    @classmethod
    def from_domain(cls: type[FactorizationModel], triple: FactorTriple) -> FactorizationModel:
        """Serialize the first two factors."""
        return cls(n=triple.n, alpha1=triple.alpha1.to_list(), alpha2=triple.alpha2.to_list())
