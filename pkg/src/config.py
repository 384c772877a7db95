"""Run configuration and numerical tolerances."""

from __future__ import annotations

import logging
import os
from typing import Literal

from pydantic import BaseModel, Field

logger = logging.getLogger(__name__)

MAX_TRIPLES_ENV = "STEINER_MAX_TRIPLES"
DEFAULT_MAX_TRIPLES = 24
DEFAULT_EXHAUSTIVE_DEGREE = 9
DEFAULT_HORIZON = 10_000


def max_triples() -> int:
    """Get the orientation enumeration cap.

    Returns:
        Value of ``STEINER_MAX_TRIPLES`` when set to a positive integer,
        otherwise the default of 24 triples
    """
    raw = os.getenv(MAX_TRIPLES_ENV)
    if not raw:
        return DEFAULT_MAX_TRIPLES
    try:
        value = int(raw)
    except ValueError:
        logger.warning(f"Ignoring non-integer {MAX_TRIPLES_ENV}={raw!r}")
        return DEFAULT_MAX_TRIPLES
    if value < 0:
        logger.warning(f"Ignoring negative {MAX_TRIPLES_ENV}={raw!r}")
        return DEFAULT_MAX_TRIPLES
    return value


class Tolerances(BaseModel):
    """Tolerances for the floating-point dynamics checks.

    Matrix tolerances are relative to the Frobenius norm of the matrix under
    test; vector tolerances are absolute on unit vectors.
    """

    skew: float = Field(default=1e-10, description="Max ||A + A^T|| / ||A||")
    orth: float = Field(default=1e-10, description="Max ||Q^T Q - I||")
    block: float = Field(default=1e-10, description="Max block-form deviation / ||A||")
    cluster: float = Field(default=1e-8, description="Relative gap merging eigenvalues")
    ambiguous: float = Field(
        default=1e-5,
        description="Relative gap below which two distinct clusters count as a tie",
    )
    zero: float = Field(default=1e-9, description="Relative size below which a part vanishes")
    rank: float = Field(default=1e-8, description="Relative residual cutoff for numeric rank")
    limit: float = Field(default=1e-8, description="Cauchy gap for the L^{4t} limit")
    cycle: float = Field(default=1e-8, description="Max ||LN^m + LN^{m+2}|| on the limit")
    cesaro: float = Field(default=1e-3, description="Max norm of the normalized Cesaro mean")
    residual: float = Field(default=1e-7, description="Max distance of the limit from V_j")
    recon: float = Field(default=1e-10, description="Max decomposition reconstruction error")


class RunConfig(BaseModel):
    """Configuration for one CLI run."""

    seed: int = Field(default=0, description="Seed for sampled rational and float vectors")
    format: Literal["text", "json", "csv"] = Field(default="text", description="Output format")
    horizon: int = Field(default=DEFAULT_HORIZON, ge=1, description="Iteration horizon")
    tolerances: Tolerances = Field(default_factory=Tolerances, description="Tolerances")
    max_triples: int = Field(
        default_factory=max_triples, description="Orientation enumeration cap"
    )
    exhaustive_degree: int = Field(
        default=DEFAULT_EXHAUSTIVE_DEGREE,
        description="Largest n scanned exhaustively over S_n",
    )
