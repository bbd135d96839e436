"""Exception hierarchy for the spectral-data library.

Validation errors derive from ValueError (the CLI maps them to exit code 1);
InvariantViolation derives from RuntimeError (exit code 2).
"""
from __future__ import annotations


class SpectralError(Exception):
    """Base class for every error raised by splitspectral."""


class DimensionMismatch(SpectralError, ValueError):
    pass


class ParityError(SpectralError, ValueError):
    pass


class RangeError(SpectralError, ValueError):
    pass


class DegenerateFormError(SpectralError, ValueError):
    pass


class ResourceLimitError(SpectralError, ValueError):
    pass


class ConfigError(SpectralError, ValueError):
    pass


class InvariantViolation(SpectralError, RuntimeError):
    """A model or identity that must hold by construction did not."""
