"""Check the long-run behaviour of L_w predicted by its skew spectrum.

For v = v_1 + ... + v_r + N split along the invariant spaces of A_w, with
p nonzero v_j:

  - dim <v, L v, ..., L^n v> = 2p, or 2p + 1 when N != 0
  - dim <L v, ..., L^n v> = 2p
  - the normalized L^{4t} v converge to a unit vector in V_j, j the
    first present component
  - that limit spans a plane with its first two images
  - L^m and L^{m+2} of the limit are opposite
  - the Cesaro mean of the normalized orbit tends to 0
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from src.algebra.linalg import span_rank
from src.algebra.product import krylov_vectors
from src.algebra.vectors import DesignVector
from src.config import DEFAULT_HORIZON, Tolerances
from src.core.design import OrientedSTS
from src.dynamics.iteration import (
    VectorLike,
    as_float_vector,
    float_companion,
    iterate_L,
    normalized_orbit,
    numeric_rank,
)
from src.dynamics.spectrum import SkewSpectrum, decompose, skew_block_diagonalize

logger = logging.getLogger(__name__)

CESARO_NOTE = "measured on normalized iterates"


@dataclass(frozen=True)
class DynamicsCheck:
    name: str
    expected: float | int | str
    measured: float | int | str
    passed: bool
    note: str = ""


@dataclass(frozen=True)
class DynamicsReport:
    n: int
    p: int
    null_nonzero: bool
    lambdas: tuple[float, ...]
    exact: bool
    checks: tuple[DynamicsCheck, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _span_dims(
    o: OrientedSTS, w: VectorLike, v: VectorLike, rel_tol: float
) -> tuple[int, int, bool]:
    n = o.n
    if isinstance(w, DesignVector) and isinstance(v, DesignVector):
        vectors = krylov_vectors(o, w, v, n)
        return span_rank(vectors), span_rank(vectors[1:]), True
    iterates = list(iterate_L(o, w, v, n).normalized())
    with_v = numeric_rank([u for u in iterates if u is not None], rel_tol)
    without_v = numeric_rank([u for u in iterates[1:] if u is not None], rel_tol)
    return with_v, without_v, False


def verify_thmdyn(
    o: OrientedSTS,
    w: VectorLike,
    v: VectorLike,
    horizon: int = DEFAULT_HORIZON,
    tol: Tolerances | None = None,
) -> DynamicsReport:
    """Run the six spectral-dynamics checks for one pair (w, v).

    Span dimensions are exact when w and v are DesignVectors. The limit,
    cycle and Cesaro checks run on the normalized orbit u_{i+1} = A u_i / |A u_i|
    for ``horizon`` steps; with p = 0 they hold vacuously.

    Args:
        o: Oriented system
        w: Multiplier
        v: Starting vector
        horizon: Number of iteration steps
        tol: Tolerances; defaults apply when omitted

    Returns:
        Report with one DynamicsCheck per prediction

    Raises:
        DegenerateSpectrum: If the spectrum of A_w cannot be clustered
        DimensionMismatch: If w or v has the wrong length
        NonFiniteVector: If w or v contains NaN or infinity
    """
    tol = tol or Tolerances()
    a = float_companion(o, w)
    vf = as_float_vector(v, o.n)
    spectrum = skew_block_diagonalize(a, tol)
    dec = decompose(spectrum, vf, tol)
    scale = float(np.linalg.norm(vf))
    null_nonzero = bool(np.linalg.norm(dec.null_part) > tol.zero * scale)
    p = dec.p

    with_v, without_v, exact = _span_dims(o, w, v, tol.rank)
    expected_i = 2 * p + (1 if null_nonzero else 0)
    checks = [
        DynamicsCheck("span_with_v", expected_i, with_v, with_v == expected_i),
        DynamicsCheck("span_without_v", 2 * p, without_v, without_v == 2 * p),
    ]

    if p == 0:
        for name in ("limit", "limit_plane", "half_turn", "cesaro"):
            checks.append(DynamicsCheck(name, "vacuous", "vacuous", True, note="p = 0"))
    else:
        present = [spectrum.lambdas[j] for j in dec.present]
        if len(present) > 1 and present[1] / present[0] > 1 - 1e-3:
            logger.warning(
                f"Leading eigenvalues {present[0]:.6g} and {present[1]:.6g} are close; "
                f"the limit may not settle within {horizon} steps"
            )
        checks.extend(_orbit_checks(a, vf, spectrum, dec.first_present(), horizon, tol))

    report = DynamicsReport(
        n=o.n,
        p=p,
        null_nonzero=null_nonzero,
        lambdas=spectrum.lambdas,
        exact=exact,
        checks=tuple(checks),
    )
    logger.info(f"Dynamics checks: p={p} null={null_nonzero} passed={report.passed}")
    return report


def _orbit_checks(
    a: np.ndarray,
    vf: np.ndarray,
    spectrum: SkewSpectrum,
    j: int,
    horizon: int,
    tol: Tolerances,
) -> list[DynamicsCheck]:
    last = (horizon // 4) * 4
    prev4 = last4 = None
    total = np.zeros_like(vf)
    for i, u in zip(range(horizon + 1), normalized_orbit(a, vf)):
        if i >= 1:
            total += u
        if i % 4 == 0 and i <= last:
            prev4, last4 = last4, u

    checks = []
    if last < 4:
        checks.append(
            DynamicsCheck(
                "limit", f"< {tol.limit:g}", "horizon too short", False, note="need 4 steps"
            )
        )
        limit = last4
    else:
        gap = float(np.linalg.norm(last4 - prev4))
        basis = spectrum.cluster_basis(j)
        residual = float(np.linalg.norm(last4 - basis @ (basis.T @ last4)))
        converged = gap < tol.limit and residual < tol.residual
        if gap >= tol.limit:
            logger.warning(f"Normalized L^4t iterates did not settle: gap {gap:.3g}")
        checks.append(
            DynamicsCheck(
                "limit",
                f"gap < {tol.limit:g}, residual < {tol.residual:g}",
                f"gap {gap:.3g}, residual {residual:.3g}",
                converged,
                note=f"lambda {spectrum.lambdas[j]:.12g}",
            )
        )
        limit = last4

    images = [limit, a @ limit, a @ (a @ limit)]
    plane = numeric_rank(images, tol.rank)
    checks.append(DynamicsCheck("limit_plane", 2, plane, plane == 2))

    orbit = [u for u, _ in zip(normalized_orbit(a, limit), range(6))]
    half_turn = max(float(np.linalg.norm(orbit[m] + orbit[m + 2])) for m in range(4))
    checks.append(
        DynamicsCheck("half_turn", f"< {tol.cycle:g}", half_turn, half_turn < tol.cycle)
    )

    cesaro = float(np.linalg.norm(total / horizon))
    checks.append(
        DynamicsCheck(
            "cesaro", f"< {tol.cesaro:g}", cesaro, cesaro < tol.cesaro, note=CESARO_NOTE
        )
    )
    return checks
