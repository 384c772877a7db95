"""Exact rank, kernels and spans over the rationals."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from fractions import Fraction
from math import gcd, lcm

from src.algebra.vectors import DesignVector
from src.core.errors import DimensionMismatch

logger = logging.getLogger(__name__)

Matrix = Sequence[Sequence[Fraction | int]]


def _integer_rows(m: Matrix) -> list[list[int]]:
    rows = []
    for row in m:
        values = [Fraction(x) for x in row]
        den = lcm(*(v.denominator for v in values)) if values else 1
        rows.append([int(v * den) for v in values])
    return rows


def rank_exact(m: Matrix) -> int:
    """Rank of a rational matrix by fraction-free (Bareiss) elimination.

    Rows are first scaled to integers; every intermediate stays an integer
    because each division by the previous pivot is exact.
    """
    a = _integer_rows(m)
    if not a or not a[0]:
        return 0
    nrows, ncols = len(a), len(a[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        if rank == nrows:
            break
        pivot = next((r for r in range(rank, nrows) if a[r][col] != 0), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        p = a[rank][col]
        for r in range(rank + 1, nrows):
            factor = a[r][col]
            for c in range(col + 1, ncols):
                a[r][c] = (a[r][c] * p - factor * a[rank][c]) // prev
            a[r][col] = 0
        prev = p
        rank += 1
    return rank


def rref(m: Matrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and its pivot columns."""
    a = [[Fraction(x) for x in row] for row in m]
    if not a:
        return a, []
    nrows, ncols = len(a), len(a[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, nrows) if a[i][col] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        lead = a[r][col]
        a[r] = [x / lead for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    return a, pivots


def _primitive(values: list[Fraction]) -> tuple[int, ...]:
    den = lcm(*(v.denominator for v in values))
    ints = [int(v * den) for v in values]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints]
    first = next(x for x in ints if x != 0)
    if first < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def kernel_basis(m: Matrix, ncols: int | None = None) -> list[DesignVector]:
    """Basis of the right kernel {x : m x = 0}.

    One vector per free column, in increasing free-column order; each vector
    is integral, primitive and has its first nonzero entry positive.

    Args:
        m: Matrix rows
        ncols: Column count, required when ``m`` has no rows
    """
    width = len(m[0]) if m else ncols
    if width is None:
        raise DimensionMismatch(0, 0)
    if not m:
        return [DesignVector.basis(width, i) for i in range(1, width + 1)]
    reduced, pivots = rref(m)
    free = [c for c in range(width) if c not in pivots]
    basis = []
    for fc in free:
        x = [Fraction(0)] * width
        x[fc] = Fraction(1)
        for row, pc in enumerate(pivots):
            x[pc] = -reduced[row][fc]
        basis.append(DesignVector.of(_primitive(x)))
    logger.debug(f"Kernel of {len(m)}x{width} matrix has dimension {len(basis)}")
    return basis


def span_rank(vectors: Sequence[DesignVector]) -> int:
    """Dimension of the span of ``vectors``."""
    return rank_exact([v.coords for v in vectors])


def in_span(x: DesignVector, vectors: Sequence[DesignVector]) -> bool:
    if not vectors:
        return x.is_zero()
    return span_rank([*vectors, x]) == span_rank(vectors)


def span_equal(a: Sequence[DesignVector], b: Sequence[DesignVector]) -> bool:
    """Whether two lists span the same subspace (checked both ways)."""
    return all(in_span(x, b) for x in a) and all(in_span(y, a) for y in b)
