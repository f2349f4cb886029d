"""Read and write documents from paths or standard streams ("-")."""

from __future__ import annotations

import sys
from pathlib import Path

from tricacti.utils.exception import InputFormatError

STDIO: str = "-"


def read_text(source: str) -> str:
    """Return the text of ``source``; ``"-"`` reads standard input.

    Raises
    ------
        InputFormatError: If the path does not exist.

    """
    if source == STDIO:
        return sys.stdin.read()
    path = Path(source)
    if not path.is_file():
        msg: str = f"input file not found: {source}"
        raise InputFormatError(message=msg)
    return path.read_text(encoding="utf-8")


def write_text(target: str | None, text: str) -> None:
    """Write ``text`` followed by a newline to ``target``; ``None`` or ``"-"`` means standard output."""
    if not text.endswith("\n"):
        text = f"{text}\n"
    if target is None or target == STDIO:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    Path(target).write_text(text, encoding="utf-8")
