"""Sparse integer polynomials for exact identity checks.

A polynomial is a map from exponent tuples to nonzero integer coefficients.
Variables 0..n-1 stand for the coordinates of a generic v, variables n..2n-1
for those of a generic w.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from itertools import combinations

from src.algebra.product import product_table
from src.core.design import OrientedSTS

logger = logging.getLogger(__name__)

Monomial = tuple[int, ...]


@dataclass(frozen=True)
class Polynomial:
    nvars: int
    terms: dict[Monomial, int]

    @classmethod
    def zero(cls, nvars: int) -> Polynomial:
        return cls(nvars, {})

    @classmethod
    def variable(cls, nvars: int, index: int) -> Polynomial:
        exps = [0] * nvars
        exps[index] = 1
        return cls(nvars, {tuple(exps): 1})

    def __add__(self, other: Polynomial) -> Polynomial:
        terms = dict(self.terms)
        for mono, c in other.terms.items():
            s = terms.get(mono, 0) + c
            if s:
                terms[mono] = s
            else:
                terms.pop(mono, None)
        return Polynomial(self.nvars, terms)

    def __neg__(self) -> Polynomial:
        return Polynomial(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def scale(self, k: int) -> Polynomial:
        if k == 0:
            return Polynomial.zero(self.nvars)
        return Polynomial(self.nvars, {m: k * c for m, c in self.terms.items()})

    def __mul__(self, other: Polynomial) -> Polynomial:
        terms: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                s = terms.get(mono, 0) + c1 * c2
                if s:
                    terms[mono] = s
                else:
                    del terms[mono]
        return Polynomial(self.nvars, terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def evaluate(self, values: Sequence[Fraction | int]) -> Fraction:
        total = Fraction(0)
        for mono, c in self.terms.items():
            term = Fraction(c)
            for x, e in zip(values, mono):
                if e:
                    term *= Fraction(x) ** e
            total += term
        return total


PolyVector = list[Polynomial]


def generic_vectors(n: int) -> tuple[PolyVector, PolyVector]:
    """Generic v and w with independent coordinate variables."""
    nvars = 2 * n
    v = [Polynomial.variable(nvars, i) for i in range(n)]
    w = [Polynomial.variable(nvars, n + i) for i in range(n)]
    return v, w


def symbolic_product(o: OrientedSTS, x: PolyVector, y: PolyVector) -> PolyVector:
    """Steiner product of polynomial vectors."""
    table = product_table(o)
    nvars = x[0].nvars
    out = [Polynomial.zero(nvars) for _ in range(o.n)]
    for i in range(1, o.n + 1):
        for j in range(1, o.n + 1):
            entry = table(i, j)
            if entry.sign == 0 or x[i - 1].is_zero() or y[j - 1].is_zero():
                continue
            out[entry.point - 1] = out[entry.point - 1] + (x[i - 1] * y[j - 1]).scale(entry.sign)
    return out


def symbolic_dot(x: PolyVector, y: PolyVector) -> Polynomial:
    total = Polynomial.zero(x[0].nvars)
    for a, b in zip(x, y):
        total = total + a * b
    return total


def krylov_rank_at_most(o: OrientedSTS, k: int, r: int) -> bool:
    """Decide exactly whether rank[v, L_w v, ..., L_w^k v] <= r for all v, w.

    Every (r+1)-minor of the n x (k+1) matrix of generic iterates is expanded
    as a polynomial in the 2n coordinates; the bound holds iff all vanish.
    Minors are built by Laplace expansion along the last column with
    memoization on row subsets.
    """
    n = o.n
    size = r + 1
    if size > min(n, k + 1):
        return True
    v, w = generic_vectors(n)
    columns = [v]
    for _ in range(k):
        columns.append(symbolic_product(o, w, columns[-1]))

    for cols in combinations(range(k + 1), size):

        @cache
        def minor(rows: tuple[int, ...], depth: int) -> Polynomial:
            col = columns[cols[depth - 1]]
            if depth == 1:
                return col[rows[0]]
            total = Polynomial.zero(2 * n)
            for pos, row in enumerate(rows):
                entry = col[row]
                if entry.is_zero():
                    continue
                sub = minor(rows[:pos] + rows[pos + 1 :], depth - 1)
                if sub.is_zero():
                    continue
                term = entry * sub
                total = total + (term if (len(rows) - 1 - pos) % 2 == 0 else -term)
            return total

        for rows in combinations(range(n), size):
            if not minor(rows, size).is_zero():
                logger.debug(f"Nonvanishing {size}-minor at rows {rows}, columns {cols}")
                return False
    return True
