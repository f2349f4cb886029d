"""Parsing helpers shared by the JSON document models."""

from __future__ import annotations

from typing import TYPE_CHECKING, Any, TypeVar

from pydantic import BaseModel, ValidationError

from tricacti.utils import load_json
from tricacti.utils.exception import InputFormatError, TricactiError

if TYPE_CHECKING:
    from collections.abc import Callable

ModelT = TypeVar("ModelT", bound=BaseModel)
ResultT = TypeVar("ResultT")


def parse_document(model: type[ModelT], text: str) -> ModelT:
    """Validate a JSON document against ``model``.

    Raises
    ------
        InputFormatError: Naming the first offending field.

    """
    data: Any = load_json(text=text)
    try:
        return model.model_validate(obj=data)
    except ValidationError as exc:
        first: dict[str, Any] = exc.errors()[0]
        location: str = ".".join(str(part) for part in first["loc"]) or "<document>"
        msg: str = f"{model.__name__}: field {location}: {first['msg']}"
        raise InputFormatError(message=msg) from exc


def convert(field: str, build: Callable[[], ResultT]) -> ResultT:
    """Run a domain constructor, reporting domain errors against ``field``."""
    try:
        return build()
    except InputFormatError:
        raise
    except TricactiError as exc:
        msg: str = f"field {field}: {exc.message}"
        raise InputFormatError(message=msg) from exc
