"""Exception types shared across the package."""

__all__ = ["ToleranceError", "InputFormatError"]


class ToleranceError(RuntimeError):
    """An internal numerical guarantee failed beyond its tolerance."""


class InputFormatError(ValueError):
    """An input file or text could not be parsed."""
