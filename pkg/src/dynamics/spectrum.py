"""Block diagonalization of real skew-symmetric matrices.

The spectrum comes from the symmetric positive semidefinite matrix -A^2,
diagonalized by cyclic Jacobi rotations. Each distinct nonzero eigenvalue
lambda^2 of -A^2 owns an A-invariant space V_j that splits into planes
spanned by (u, -A u / lambda).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from src.config import Tolerances
from src.core.errors import DegenerateSpectrum, DimensionMismatch, NotSkewSymmetric

logger = logging.getLogger(__name__)

MAX_SWEEPS = 60


def jacobi_eigh(s: np.ndarray, rel_tol: float = 1e-15) -> tuple[np.ndarray, np.ndarray]:
    """Eigen-decompose a real symmetric matrix with cyclic Jacobi sweeps.

    Pivots are visited in row-major order every sweep, so results are
    reproducible bit for bit.

    Returns:
        (eigenvalues descending, orthogonal matrix whose columns are eigenvectors)
    """
    a = np.array(s, dtype=np.float64, copy=True)
    n = a.shape[0]
    v = np.eye(n)
    scale = np.linalg.norm(a)
    if scale == 0.0:
        return np.zeros(n), v

    for sweep in range(MAX_SWEEPS):
        off = np.linalg.norm(a - np.diag(np.diag(a)))
        if off <= rel_tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                sn = t * c
                rot = np.eye(n)
                rot[p, p] = rot[q, q] = c
                rot[p, q] = sn
                rot[q, p] = -sn
                a = rot.T @ a @ rot
                v = v @ rot
    else:
        logger.warning(f"Jacobi iteration hit the sweep cap ({MAX_SWEEPS})")

    values = np.diag(a).copy()
    order = np.argsort(-values, kind="stable")
    return values[order], v[:, order]


@dataclass(frozen=True, eq=False)
class SkewSpectrum:
    """Orthogonal Q (rows q_k) with Q A Q^T in canonical block form.

    Pair p occupies rows ``block_pairs[p]`` of Q and belongs to cluster
    ``pair_cluster[p]``; A q_a = -lambda q_b and A q_b = lambda q_a for
    (a, b) = block_pairs[p].
    """

    lambdas: tuple[float, ...]
    multiplicities: tuple[int, ...]
    q: np.ndarray
    block_pairs: tuple[tuple[int, int], ...]
    pair_cluster: tuple[int, ...]
    null_basis: np.ndarray

    @property
    def n(self) -> int:
        return self.q.shape[0]

    @property
    def null_dim(self) -> int:
        return self.null_basis.shape[1]

    def block_form(self) -> np.ndarray:
        b = np.zeros((self.n, self.n))
        for (r1, r2), j in zip(self.block_pairs, self.pair_cluster):
            b[r1, r2] = self.lambdas[j]
            b[r2, r1] = -self.lambdas[j]
        return b

    def cluster_basis(self, j: int) -> np.ndarray:
        """Orthonormal columns spanning V_j."""
        rows: list[int] = []
        for pair, c in zip(self.block_pairs, self.pair_cluster):
            if c == j:
                rows.extend(pair)
        return self.q[rows].T

    def reconstruction_error(self, a: np.ndarray) -> float:
        """||Q^T B Q - A||_F relative to ||A||_F."""
        norm = np.linalg.norm(a)
        err = np.linalg.norm(self.q.T @ self.block_form() @ self.q - a)
        return float(err / norm) if norm else float(err)

    def orthogonality_error(self) -> float:
        return float(np.linalg.norm(self.q.T @ self.q - np.eye(self.n)))


def _cluster(lams: list[float], tol: Tolerances) -> list[list[int]]:
    clusters: list[list[int]] = []
    for i, lam in enumerate(lams):
        if clusters:
            head = lams[clusters[-1][0]]
            gap = (head - lam) / head
            if gap <= tol.cluster:
                clusters[-1].append(i)
                continue
            if gap <= tol.ambiguous:
                raise DegenerateSpectrum(
                    f"eigenvalues {head:.12g} and {lam:.12g} neither merge nor separate "
                    f"(relative gap {gap:.3g})"
                )
        clusters.append([i])
    return clusters


def _orthonormal_columns(m: np.ndarray, rank: int) -> np.ndarray:
    u, _, _ = np.linalg.svd(m, full_matrices=False)
    return u[:, :rank]


def skew_block_diagonalize(a: np.ndarray, tol: Tolerances | None = None) -> SkewSpectrum:
    """Bring a skew-symmetric matrix to canonical 2x2 block form.

    Args:
        a: Real skew-symmetric n x n matrix
        tol: Tolerances; defaults apply when omitted

    Returns:
        The spectrum with lambdas strictly decreasing

    Raises:
        NotSkewSymmetric: If ||A + A^T|| exceeds tol.skew * ||A||
        DegenerateSpectrum: If eigenvalue clusters cannot be told apart, or a
            cluster has odd multiplicity in -A^2
    """
    tol = tol or Tolerances()
    a = np.asarray(a, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatch(a.shape[0], a.shape[-1])
    n = a.shape[0]
    norm = np.linalg.norm(a)
    if norm and np.linalg.norm(a + a.T) > tol.skew * norm:
        raise NotSkewSymmetric(f"||A + A^T|| = {np.linalg.norm(a + a.T):.3g}")
    if norm == 0.0:
        return SkewSpectrum((), (), np.eye(n), (), (), np.eye(n))

    s = -(a @ a)
    s = (s + s.T) / 2.0
    mu, vecs = jacobi_eigh(s)
    mu_max = max(mu[0], 0.0)
    nonzero = [i for i in range(n) if mu[i] > tol.zero * mu_max]
    zero = [i for i in range(n) if i not in nonzero]

    lams = [float(np.sqrt(mu[i])) for i in nonzero]
    clusters = _cluster(lams, tol)

    rows: list[np.ndarray] = []
    pairs: list[tuple[int, int]] = []
    pair_cluster: list[int] = []
    lambdas: list[float] = []
    multiplicities: list[int] = []
    for j, members in enumerate(clusters):
        if len(members) % 2:
            raise DegenerateSpectrum(f"eigenvalue {lams[members[0]]:.12g} has odd multiplicity")
        lam = float(np.mean([lams[i] for i in members]))
        lambdas.append(lam)
        multiplicities.append(len(members) // 2)
        basis = vecs[:, [nonzero[i] for i in members]]
        for _ in range(len(members) // 2):
            q1 = basis[:, 0] / np.linalg.norm(basis[:, 0])
            q2 = -(a @ q1) / lam
            q2 /= np.linalg.norm(q2)
            pairs.append((len(rows), len(rows) + 1))
            pair_cluster.append(j)
            rows.extend([q1, q2])
            rest = basis - np.outer(q1, q1 @ basis) - np.outer(q2, q2 @ basis)
            remaining = basis.shape[1] - 2
            basis = _orthonormal_columns(rest, remaining) if remaining else rest[:, :0]

    null_basis = (
        _orthonormal_columns(vecs[:, zero], len(zero)) if zero else np.zeros((n, 0))
    )
    rows.extend(null_basis.T)
    q = np.array(rows)

    spectrum = SkewSpectrum(
        lambdas=tuple(lambdas),
        multiplicities=tuple(multiplicities),
        q=q,
        block_pairs=tuple(pairs),
        pair_cluster=tuple(pair_cluster),
        null_basis=null_basis,
    )
    logger.debug(
        f"Skew spectrum: lambdas={spectrum.lambdas} multiplicities={spectrum.multiplicities} "
        f"null_dim={spectrum.null_dim}"
    )
    return spectrum


@dataclass(frozen=True, eq=False)
class SpectralDecomposition:
    """v = sum_j v_j + N with v_j in V_j and N in the null space."""

    components: tuple[np.ndarray, ...]
    null_part: np.ndarray
    present: tuple[int, ...]

    @property
    def p(self) -> int:
        """Number of nonzero components v_j."""
        return len(self.present)

    def first_present(self) -> int | None:
        """Index of the nonzero component with the largest lambda."""
        return self.present[0] if self.present else None

    def reconstruction_error(self, v: np.ndarray) -> float:
        return float(np.linalg.norm(v - sum(self.components, self.null_part)))


def decompose(
    spectrum: SkewSpectrum, v: np.ndarray, tol: Tolerances | None = None
) -> SpectralDecomposition:
    """Project v onto each V_j and the null space.

    Raises:
        DimensionMismatch: If v's length differs from the spectrum's
    """
    tol = tol or Tolerances()
    v = np.asarray(v, dtype=np.float64)
    if v.shape != (spectrum.n,):
        raise DimensionMismatch(spectrum.n, v.shape[0])
    scale = np.linalg.norm(v)
    components = []
    for j in range(len(spectrum.lambdas)):
        basis = spectrum.cluster_basis(j)
        components.append(basis @ (basis.T @ v))
    null_part = spectrum.null_basis @ (spectrum.null_basis.T @ v)
    present = tuple(
        j for j, c in enumerate(components) if np.linalg.norm(c) > tol.zero * scale
    )
    return SpectralDecomposition(
        components=tuple(components), null_part=null_part, present=present
    )
