"""The Steiner product, its symbolic table and companion matrices."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from src.algebra.linalg import kernel_basis, rank_exact, span_rank
from src.algebra.vectors import DesignVector
from src.core.design import OrientedSTS, orientation_function
from src.core.errors import DimensionMismatch, ZeroVector

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SignedBasis:
    """A signed basis vector ``sign * s_point``; sign 0 means the zero vector."""

    sign: int
    point: int | None = None

    def __post_init__(self) -> None:
        if (self.sign == 0) != (self.point is None):
            raise ValueError("sign must be 0 exactly when point is absent")

    def __neg__(self) -> SignedBasis:
        return SignedBasis(-self.sign, self.point)

    def __str__(self) -> str:
        if self.sign == 0:
            return "0"
        return f"{'-' if self.sign < 0 else ''}s{self.point}"


ZERO = SignedBasis(0)


@dataclass(frozen=True)
class ProductTable:
    """The symbolic matrix M with entries s_i x s_j."""

    n: int
    m: tuple[tuple[SignedBasis, ...], ...]

    def __call__(self, i: int, j: int) -> SignedBasis:
        return self.m[i - 1][j - 1]


@lru_cache(maxsize=256)
def product_table(o: OrientedSTS) -> ProductTable:
    """Tabulate s_i x s_j = f(i, j) s_k over the triple {i, j, k}."""
    f = orientation_function(o)
    rows = []
    for i in range(1, o.n + 1):
        row = []
        for j in range(1, o.n + 1):
            row.append(ZERO if i == j else SignedBasis(f(i, j), o.base.third(i, j)))
        rows.append(tuple(row))
    return ProductTable(n=o.n, m=tuple(rows))


def _check_dims(o: OrientedSTS, *vectors: DesignVector) -> None:
    for v in vectors:
        if v.n != o.n:
            raise DimensionMismatch(o.n, v.n)


def steiner_product(o: OrientedSTS, a: DesignVector, b: DesignVector) -> DesignVector:
    """Bilinear extension of the basis product.

    Raises:
        DimensionMismatch: If a vector's length differs from o.n
    """
    _check_dims(o, a, b)
    table = product_table(o)
    out = [Fraction(0)] * o.n
    for i, ai in enumerate(a.coords, start=1):
        if not ai:
            continue
        for j, bj in enumerate(b.coords, start=1):
            if not bj or i == j:
                continue
            entry = table(i, j)
            out[entry.point - 1] += entry.sign * ai * bj
    return DesignVector(tuple(out))


def product_via_trace(o: OrientedSTS, a: DesignVector, b: DesignVector) -> DesignVector:
    """Evaluate a x b as the formal expansion of tr([a]^T M [b]).

    The row [a]^T M is built first as a list of vectors, then contracted
    with [b].
    """
    _check_dims(o, a, b)
    table = product_table(o)
    zero = DesignVector.zeros(o.n)
    row = []
    for j in range(1, o.n + 1):
        acc = [Fraction(0)] * o.n
        for i in range(1, o.n + 1):
            entry = table(i, j)
            if entry.sign:
                acc[entry.point - 1] += entry.sign * a[i]
        row.append(DesignVector(tuple(acc)))
    result = zero
    for j, r in enumerate(row, start=1):
        if b[j]:
            result = result + b[j] * r
    return result


@dataclass(frozen=True)
class CompanionMatrix:
    """Matrix of left multiplication L_w(v) = w x v, so A[v] = [w x v].

    Entry (i, j) is the coefficient of s_i in w x s_j.
    """

    a: tuple[tuple[Fraction, ...], ...]

    @property
    def n(self) -> int:
        return len(self.a)

    def __call__(self, i: int, j: int) -> Fraction:
        return self.a[i - 1][j - 1]

    def apply(self, v: DesignVector) -> DesignVector:
        if v.n != self.n:
            raise DimensionMismatch(self.n, v.n)
        return DesignVector(
            tuple(sum((x * y for x, y in zip(row, v.coords)), Fraction(0)) for row in self.a)
        )

    def transpose(self) -> CompanionMatrix:
        return CompanionMatrix(tuple(zip(*self.a)))

    def is_skew_symmetric(self) -> bool:
        return all(
            self.a[i][j] == -self.a[j][i] for i in range(self.n) for j in range(self.n)
        )

    def rank(self) -> int:
        return rank_exact(self.a)

    def kernel(self) -> list[DesignVector]:
        return kernel_basis(self.a, self.n)

    def to_float(self) -> np.ndarray:
        return np.array([[float(x) for x in row] for row in self.a], dtype=np.float64)

    def to_strings(self) -> list[list[str]]:
        return [[str(x) for x in row] for row in self.a]

    def render_grid(self) -> str:
        """Aligned text grid, one matrix row per line."""
        cells = self.to_strings()
        width = max((len(c) for row in cells for c in row), default=1)
        return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)


def companion_matrix(o: OrientedSTS, w: DesignVector) -> CompanionMatrix:
    """Build A_w column by column: column j is w x s_j.

    Raises:
        DimensionMismatch: If w's length differs from o.n
    """
    _check_dims(o, w)
    columns = [steiner_product(o, w, DesignVector.basis(o.n, j)).coords for j in range(1, o.n + 1)]
    return CompanionMatrix(tuple(zip(*columns)))


def right_companion_matrix(o: OrientedSTS, w: DesignVector) -> CompanionMatrix:
    """Matrix of v -> v x w, which is the transpose of A_w."""
    return companion_matrix(o, w).transpose()


@dataclass(frozen=True)
class ZeroDivisorResult:
    is_zero_divisor: bool
    rank: int
    witness: DesignVector | None


def is_zero_divisor(o: OrientedSTS, w: DesignVector) -> ZeroDivisorResult:
    """Decide whether w is a zero-divisor, i.e. rank(A_w) < n - 1.

    The witness is the first kernel basis vector independent of w.

    Raises:
        ZeroVector: If w = 0
    """
    _check_dims(o, w)
    if w.is_zero():
        raise ZeroVector("zero-divisor test requires a nonzero vector")
    a = companion_matrix(o, w)
    rank = a.rank()
    flag = rank < o.n - 1
    witness = None
    if flag:
        witness = next((k for k in a.kernel() if span_rank([w, k]) == 2), None)
    logger.debug(f"rank(A_w) = {rank} for w = {w.symbolic()}; zero-divisor: {flag}")
    return ZeroDivisorResult(is_zero_divisor=flag, rank=rank, witness=witness)


def krylov_vectors(o: OrientedSTS, w: DesignVector, v: DesignVector, k: int) -> list[DesignVector]:
    """Exact iterates [v, L_w v, ..., L_w^k v]."""
    a = companion_matrix(o, w)
    out = [v]
    for _ in range(k):
        out.append(a.apply(out[-1]))
    return out
