"""Basic functionality for serialization."""

from __future__ import annotations

import json
from typing import Any

from yaml import safe_load

from .exception import InputFormatError


def load_yaml(file_path: str) -> dict[str, str | int | float | bool | None | list | dict] | dict:
    """Load a YAML file and return its contents as a dictionary.

    Args:
    ----
        file_path (str): The path to the YAML file.

    Returns:
    -------
        dict: The contents of the YAML file, empty when the file is empty.

    """
    with open(file=file_path, encoding="utf-8") as obj:  # noqa: PTH123
        file_content: str = obj.read()

    data: dict[str, str | int | float | bool | None | list | dict] = safe_load(stream=file_content) or {}
    return data


def load_json(text: str) -> Any:  # noqa: ANN401
    """Parse a JSON document held in memory.

    Raises
    ------
        InputFormatError: If the text is not valid JSON.

    """
    try:
        return json.loads(s=text)
    except json.JSONDecodeError as exc:
        msg: str = f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        raise InputFormatError(message=msg) from exc


def dump_json(data: Any, *, indent: int | None = None) -> str:  # noqa: ANN401
    """Serialize data to JSON with sorted keys so repeated runs are byte-identical.

    Args:
    ----
        data (Any): JSON-compatible data.
        indent (int | None): Pretty-print indentation; compact when None.

    Returns:
    -------
        str: The JSON text without a trailing newline.

    """
    separators: tuple[str, str] = (",", ": ") if indent else (",", ":")
    return json.dumps(obj=data, indent=indent, sort_keys=True, separators=separators)
