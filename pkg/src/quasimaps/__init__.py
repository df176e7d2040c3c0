"""Exact quasimap series for four Calabi-Yau fibration geometries, and checks of their identities."""

from .field import CycloRational, embed_rational, root_of_unity
from .series import BiSeries, UniSeries, coefficient_slice, reversion, substitute
from .geometry import PRESETS, get_preset

__version__ = "0.1.0"

__all__ = [
    "CycloRational", "embed_rational", "root_of_unity",
    "BiSeries", "UniSeries", "coefficient_slice", "reversion", "substitute",
    "PRESETS", "get_preset",
]
