"""
値オブジェクトの公開API。
"""

from .rational import format_rational, parse_rational
from .rng_seed import MAX_SEED, RngSeed
from .search_budget import SearchBudget
from .spectral_profile import EIGEN_TOLERANCE, SpectralProfile

__all__ = [
    "EIGEN_TOLERANCE",
    "MAX_SEED",
    "RngSeed",
    "SearchBudget",
    "SpectralProfile",
    "format_rational",
    "parse_rational",
]
