"""Imaginary quaternion and octonion multiplication tables."""

from __future__ import annotations

import logging

from src.algebra.product import steiner_product
from src.algebra.vectors import DesignVector
from src.core.design import OrientedSTS
from src.core.errors import DimensionMismatch

logger = logging.getLogger(__name__)

# Row i lists e_i * e_j for j = 1..n as signed indices; the diagonal (-1)
# is real and drops out of the imaginary part, written as 0.
QUATERNION = (
    (0, 3, -2),  # i
    (-3, 0, 1),  # j
    (2, -1, 0),  # k
)

OCTONION = (
    (0, 3, -2, 5, -4, 7, -6),
    (-3, 0, 1, 6, -7, -4, 5),
    (2, -1, 0, -7, -6, 5, 4),
    (-5, -6, 7, 0, 1, 2, -3),
    (4, 7, 6, -1, 0, -3, -2),
    (-7, 4, -5, -2, 3, 0, 1),
    (6, -5, -4, 3, 2, -1, 0),
)

TABLES = {"quaternion": QUATERNION, "octonion": OCTONION}


def imaginary_product(table: tuple[tuple[int, ...], ...], i: int, j: int) -> DesignVector:
    n = len(table)
    entry = table[i - 1][j - 1]
    if entry == 0:
        return DesignVector.zeros(n)
    return (1 if entry > 0 else -1) * DesignVector.basis(n, abs(entry))


def multiplication_table_check(o: OrientedSTS, table: str) -> bool:
    """Compare s_i x s_j with Im(e_i e_j) over all ordered pairs i != j.

    Args:
        o: Oriented system with n = 3 (quaternion) or n = 7 (octonion)
        table: 'quaternion' or 'octonion'

    Raises:
        DimensionMismatch: If n does not match the table
    """
    rows = TABLES[table]
    if o.n != len(rows):
        raise DimensionMismatch(len(rows), o.n)
    for i in range(1, o.n + 1):
        for j in range(1, o.n + 1):
            if i == j:
                continue
            expected = imaginary_product(rows, i, j)
            actual = steiner_product(o, DesignVector.basis(o.n, i), DesignVector.basis(o.n, j))
            if actual != expected:
                logger.debug(f"{table} mismatch at e{i}*e{j}: {actual.symbolic()}")
                return False
    return True
