"""Size limits read from the configuration, with environment overrides."""

from __future__ import annotations

from os import getenv

from tricacti.utils import LIMITS_CFG, VERBOSE

from .exception import LimitExceededError


def enumeration_limit() -> int:
    """Return the largest n accepted by brute-force enumeration.

    The environment variable named by ``enumeration.env_key`` (CACTUS3_MAX_N) takes precedence over
    ``enumeration.max_n``. It is read on every call so tests and the CLI can change it at runtime.
    """
    key: str = str(LIMITS_CFG.enumeration["env_key"])
    value: str | None = getenv(key=key)
    if value is None or not value.strip():
        return int(LIMITS_CFG.enumeration["max_n"])
    try:
        return int(value)
    except ValueError as exc:
        msg: str = f"{key} must be an integer, got {value!r}"
        raise LimitExceededError(message=msg) from exc


def tree_limit() -> int:
    """Return the largest vertex count accepted by cactus tree enumeration."""
    return int(LIMITS_CFG.tree["max_vertices"])


def series_limit() -> int:
    """Return the largest weighted degree accepted by the generating function fixed point."""
    return int(LIMITS_CFG.series["max_degree"])


def poly_cap() -> int:
    """Return the largest exponent accepted by polynomial identity checks."""
    return int(LIMITS_CFG.algebra["poly_cap"])


def progress_enabled(total: int) -> bool:
    """Return whether a progress bar over ``total`` items is shown; never when VERBOSE is off."""
    return VERBOSE and total >= int(LIMITS_CFG.progress["min_total"])


def check_limit(*, value: int, limit: int, what: str, force: bool = False, hint: str = "") -> None:
    """Raise ``LimitExceededError`` when ``value`` exceeds ``limit`` and ``force`` is off.

    Args:
    ----
        value (int): Requested size.
        limit (int): Configured maximum.
        what (str): Name of the guarded quantity, used in the message.
        force (bool): Skip the check.
        hint (str): Extra advice appended to the message.

    Raises:
    ------
        LimitExceededError: If the limit is exceeded.

    """
    if force or value <= limit:
        return
    msg: str = f"{what} = {value} exceeds the configured limit {limit}"
    if hint:
        msg = f"{msg}; {hint}"
    raise LimitExceededError(message=msg)
