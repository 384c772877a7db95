"""Floating-point dynamics of the left multiplication map L_w."""

from src.dynamics.iteration import (
    IterationTrace,
    RankGrowth,
    as_float_vector,
    float_companion,
    iterate_L,
    normalized_orbit,
    numeric_rank,
    rank_growth,
    trace_csv,
)
from src.dynamics.spectrum import (
    SkewSpectrum,
    SpectralDecomposition,
    decompose,
    jacobi_eigh,
    skew_block_diagonalize,
)
from src.dynamics.theorem import DynamicsCheck, DynamicsReport, verify_thmdyn

__all__ = [
    "DynamicsCheck",
    "DynamicsReport",
    "IterationTrace",
    "RankGrowth",
    "SkewSpectrum",
    "SpectralDecomposition",
    "as_float_vector",
    "decompose",
    "float_companion",
    "iterate_L",
    "jacobi_eigh",
    "normalized_orbit",
    "numeric_rank",
    "rank_growth",
    "skew_block_diagonalize",
    "trace_csv",
    "verify_thmdyn",
]
