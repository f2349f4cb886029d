"""Exceptions raised across tricacti.

Every class takes a single human readable message. The command line front end maps
``LimitExceededError`` to exit status 3 and ``InputFormatError`` to exit status 2.
"""

from __future__ import annotations


class TricactiError(Exception):
    """Base class for all tricacti errors."""

    def __init__(self: TricactiError, message: str) -> None:
        """Initialize the error with a specific message.

        Args:
        ----
        message : str
            The message describing the error.

        """
        super().__init__(message)
        self.message: str = message


class DegreeMismatchError(TricactiError, ValueError):
    """Two permutations (or a permutation and a set) live on different ground sets."""


class PermutationError(TricactiError, ValueError):
    """An image list is not a bijection of {1..n}."""


class PartitionError(TricactiError, ValueError):
    """Blocks do not form a set partition of {1..n}."""


class LimitExceededError(TricactiError):
    """A size limit from the configuration was exceeded without --force."""


class SeriesError(TricactiError, ValueError):
    """Invalid truncated series operation."""


class InvalidTupleError(TricactiError, ValueError):
    """An image tuple violates its size or membership constraints."""


class InvariantViolationError(TricactiError, AssertionError):
    """A property guaranteed by the theory failed; always a bug."""


class InputFormatError(TricactiError, ValueError):
    """An input document could not be parsed."""


class InvalidCactusError(TricactiError, ValueError):
    """A partitioned cactus violates its stability invariants."""
