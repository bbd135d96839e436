"""Spectral data of split real Higgs bundles: GF(2) models, characteristic classes and component counts."""

__version__ = "0.1.0"

from .covers import CurveParams, build_geometry
from .errors import InvariantViolation, SpectralError

__all__ = ["CurveParams", "InvariantViolation", "SpectralError", "build_geometry", "__version__"]
