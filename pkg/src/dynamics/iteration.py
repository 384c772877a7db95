"""Iteration of the left multiplication operator L_w(v) = w x v."""

from __future__ import annotations

import csv
import io
import logging
from collections.abc import Iterator, Sequence
from dataclasses import dataclass

import numpy as np

from src.algebra.linalg import span_rank
from src.algebra.product import krylov_vectors, product_table
from src.algebra.vectors import DesignVector
from src.core.design import OrientedSTS
from src.core.errors import DimensionMismatch, NonFiniteVector

logger = logging.getLogger(__name__)

VectorLike = DesignVector | Sequence[float] | np.ndarray


def as_float_vector(x: VectorLike, n: int) -> np.ndarray:
    """Coerce a vector to float64 of length n.

    Raises:
        DimensionMismatch: If the length is not n
        NonFiniteVector: If any coordinate is NaN or infinite
    """
    arr = x.to_float() if isinstance(x, DesignVector) else np.asarray(x, dtype=np.float64)
    if arr.shape != (n,):
        raise DimensionMismatch(n, arr.shape[0] if arr.ndim else 0)
    if not np.all(np.isfinite(arr)):
        raise NonFiniteVector("vector has NaN or infinite coordinates")
    return arr


def float_companion(o: OrientedSTS, w: VectorLike) -> np.ndarray:
    """Float matrix of L_w; entry (i, j) is the coefficient of s_i in w x s_j."""
    n = o.n
    wf = as_float_vector(w, n)
    table = product_table(o)
    a = np.zeros((n, n))
    for k in range(1, n + 1):
        if wf[k - 1] == 0.0:
            continue
        for j in range(1, n + 1):
            entry = table(k, j)
            if entry.sign:
                a[entry.point - 1, j - 1] += entry.sign * wf[k - 1]
    return a


def normalized_orbit(a: np.ndarray, v: np.ndarray) -> Iterator[np.ndarray | None]:
    """Yield LN^0 v, LN^1 v, ... where LN u = A u / |A u|.

    Yields None forever once an iterate vanishes.
    """
    norm = np.linalg.norm(v)
    u = v / norm if norm else None
    while True:
        yield u
        if u is None:
            continue
        nxt = a @ u
        norm = np.linalg.norm(nxt)
        u = nxt / norm if norm else None


@dataclass(frozen=True, eq=False)
class IterationTrace:
    """Raw iterates L^0 v ... L^k v and their norms."""

    iterates: tuple[np.ndarray, ...]

    @property
    def norms(self) -> list[float]:
        return [float(np.linalg.norm(x)) for x in self.iterates]

    def normalized(self) -> list[np.ndarray | None]:
        return [x / n if n else None for x, n in zip(self.iterates, self.norms)]


def iterate_L(o: OrientedSTS, w: VectorLike, v: VectorLike, k: int) -> IterationTrace:
    """Compute v, L_w v, ..., L_w^k v in floating point.

    Raw iterates grow like lambda_1^k; use normalized_orbit for long horizons.
    """
    a = float_companion(o, w)
    x = as_float_vector(v, o.n)
    out = [x]
    for _ in range(k):
        out.append(a @ out[-1])
    return IterationTrace(tuple(out))


def numeric_rank(columns: Sequence[np.ndarray], rel_tol: float = 1e-8) -> int:
    """Rank of a list of vectors by column-pivoted Gram-Schmidt.

    Columns are normalized first, so the cutoff is a relative residual.
    Zero columns contribute nothing.
    """
    cols = []
    for c in columns:
        norm = np.linalg.norm(c)
        if norm:
            cols.append(np.asarray(c, dtype=np.float64) / norm)
    if not cols:
        return 0
    residual = np.array(cols).T
    rank = 0
    while residual.shape[1]:
        norms = np.linalg.norm(residual, axis=0)
        pivot = int(np.argmax(norms))
        if norms[pivot] <= rel_tol:
            break
        q = residual[:, pivot] / norms[pivot]
        residual = np.delete(residual, pivot, axis=1)
        residual -= np.outer(q, q @ residual)
        rank += 1
    return rank


@dataclass(frozen=True)
class RankGrowth:
    """ranks[k] = rank[v, L v, ..., L^k v] for k = 0..max_k."""

    ranks: tuple[int, ...]
    exact: bool

    @property
    def plateau_k(self) -> int:
        """First k with ranks[k] == ranks[k+1], or max_k if none."""
        for k in range(len(self.ranks) - 1):
            if self.ranks[k] == self.ranks[k + 1]:
                return k
        return len(self.ranks) - 1

    @property
    def plateau_rank(self) -> int:
        return self.ranks[self.plateau_k]


def rank_growth(
    o: OrientedSTS,
    w: VectorLike,
    v: VectorLike,
    max_k: int | None = None,
    rel_tol: float = 1e-8,
) -> RankGrowth:
    """Rank of the Krylov prefix [v, L v, ..., L^k v] for each k.

    Exact rational ranks are used when both w and v are DesignVectors,
    otherwise numeric_rank on normalized float iterates.

    Args:
        o: Oriented system
        w: Multiplier
        v: Starting vector
        max_k: Last power, defaults to n
        rel_tol: Cutoff for the numeric path
    """
    max_k = o.n if max_k is None else max_k
    if isinstance(w, DesignVector) and isinstance(v, DesignVector):
        vectors = krylov_vectors(o, w, v, max_k)
        ranks = tuple(span_rank(vectors[: k + 1]) for k in range(max_k + 1))
        exact = True
    else:
        a = float_companion(o, w)
        orbit = normalized_orbit(a, as_float_vector(v, o.n))
        prefix = [u for u, _ in zip(orbit, range(max_k + 1))]
        ranks = tuple(
            numeric_rank([u for u in prefix[: k + 1] if u is not None], rel_tol)
            for k in range(max_k + 1)
        )
        exact = False
    growth = RankGrowth(ranks=ranks, exact=exact)
    logger.debug(f"Rank growth {ranks}, plateau at k={growth.plateau_k}")
    return growth


def trace_csv(trace: IterationTrace) -> str:
    """CSV with columns k, norm, u1..un of the normalized iterates."""
    buf = io.StringIO()
    n = trace.iterates[0].shape[0]
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["k", "norm", *(f"u{i}" for i in range(1, n + 1))])
    for k, (u, norm) in enumerate(zip(trace.normalized(), trace.norms)):
        coords = [repr(float(x)) for x in u] if u is not None else ["0.0"] * n
        writer.writerow([k, repr(norm), *coords])
    return buf.getvalue()
