"""Exception types raised by the library."""

from __future__ import annotations


class DyckError(Exception):
    """Base class for all domain errors."""


class InvalidCharacterError(DyckError):
    """A character outside the accepted step alphabets was encountered."""

    def __init__(self, char: str, position: int):
        self.char = char
        self.position = position  # 1-based
        super().__init__(f"invalid character {char!r} at position {position}")


class NotADyckWordError(DyckError):
    """An operation restricted to Dyck words received something else."""


class NotBilateralError(DyckError):
    """An operation restricted to closed (balanced) words received an open one."""


class EmptyWordError(DyckError):
    """An operation requiring a nonempty word received the empty word."""


class UnknownStatisticError(DyckError):
    """A statistic name not present on StatRecord was requested."""
