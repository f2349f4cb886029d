from .base import convert, parse_document
from .cactus import FactorizationModel, PartitionedCactusModel
from .image import ImageTupleModel
from .report import VerificationReport
from .tree import CactusTreeModel

__all__: list[str] = [
    "CactusTreeModel",
    "FactorizationModel",
    "ImageTupleModel",
    "PartitionedCactusModel",
    "VerificationReport",
    "convert",
    "parse_document",
]
