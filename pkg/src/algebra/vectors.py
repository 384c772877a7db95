"""Exact rational vectors in R^S and the lifted permutation action."""

from __future__ import annotations

import logging
import re
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from src.core.errors import DegreeMismatch, DesignSyntaxError, DimensionMismatch
from src.groups.permutation import Permutation, PermutationGroup

logger = logging.getLogger(__name__)

Scalar = Fraction

_TERM = re.compile(r"\s*(?P<sign>[+-])?\s*(?P<coef>\d+(?:/\d+)?)?\s*\*?\s*s(?P<index>\d+)\s*")


@dataclass(frozen=True)
class DesignVector:
    """A vector sum a_i s_i with exact rational coordinates, indexed from s1."""

    coords: tuple[Fraction, ...]

    @classmethod
    def of(cls, values: Iterable[int | str | Fraction]) -> DesignVector:
        return cls(tuple(Fraction(v) for v in values))

    @classmethod
    def zeros(cls, n: int) -> DesignVector:
        return cls((Fraction(0),) * n)

    @classmethod
    def basis(cls, n: int, i: int) -> DesignVector:
        """The basis vector s_i (1-based)."""
        if not 1 <= i <= n:
            raise DimensionMismatch(n, i)
        return cls(tuple(Fraction(int(j == i)) for j in range(1, n + 1)))

    @classmethod
    def parse(cls, text: str, n: int) -> DesignVector:
        """Parse a coordinate list ("1 0 2/3 ...") or a symbolic sum ("s1+2*s5-s7").

        The two forms are told apart by the presence of ``s``; ``0`` alone is
        the zero vector.

        Raises:
            DesignSyntaxError: On malformed literals
            DimensionMismatch: On the wrong coordinate count or an index above n
        """
        text = text.replace("−", "-").strip()
        if text == "0":
            return cls.zeros(n)
        if "s" in text:
            return cls._parse_symbolic(text, n)
        tokens = [t for t in re.split(r"[\s,]+", text) if t]
        try:
            values = [Fraction(t) for t in tokens]
        except (ValueError, ZeroDivisionError) as e:
            raise DesignSyntaxError(f"invalid coordinate in {text!r}: {e}") from e
        if len(values) != n:
            raise DimensionMismatch(n, len(values))
        return cls(tuple(values))

    @classmethod
    def _parse_symbolic(cls, text: str, n: int) -> DesignVector:
        coords = [Fraction(0)] * n
        pos = 0
        while pos < len(text):
            match = _TERM.match(text, pos)
            if not match or (pos > 0 and match["sign"] is None):
                raise DesignSyntaxError(f"invalid term in {text!r}", 1, pos + 1)
            index = int(match["index"])
            if not 1 <= index <= n:
                raise DimensionMismatch(n, index)
            try:
                coef = Fraction(match["coef"]) if match["coef"] else Fraction(1)
            except ZeroDivisionError as e:
                raise DesignSyntaxError(f"zero denominator in {text!r}", 1, pos + 1) from e
            if match["sign"] == "-":
                coef = -coef
            coords[index - 1] += coef
            pos = match.end()
        return cls(tuple(coords))

    @property
    def n(self) -> int:
        return len(self.coords)

    def __getitem__(self, i: int) -> Fraction:
        """Coordinate of s_i (1-based)."""
        return self.coords[i - 1]

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.coords)

    def _check(self, other: DesignVector) -> None:
        if other.n != self.n:
            raise DimensionMismatch(self.n, other.n)

    def __add__(self, other: DesignVector) -> DesignVector:
        self._check(other)
        return DesignVector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: DesignVector) -> DesignVector:
        self._check(other)
        return DesignVector(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> DesignVector:
        return DesignVector(tuple(-a for a in self.coords))

    def __rmul__(self, scalar: int | Fraction) -> DesignVector:
        return DesignVector(tuple(scalar * a for a in self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def to_float(self) -> np.ndarray:
        return np.array([float(a) for a in self.coords], dtype=np.float64)

    def to_strings(self) -> list[str]:
        return [str(a) for a in self.coords]

    def __str__(self) -> str:
        return " ".join(self.to_strings())

    def symbolic(self) -> str:
        """Render as a sum of basis vectors, e.g. ``s1+s5`` or ``-s3+1/2*s7``."""
        terms = []
        for i, a in enumerate(self.coords, start=1):
            if a == 0:
                continue
            sign = "-" if a < 0 else "+"
            mag = abs(a)
            coef = "" if mag == 1 else f"{mag}*"
            terms.append(f"{sign}{coef}s{i}")
        if not terms:
            return "0"
        text = "".join(terms)
        return text[1:] if text.startswith("+") else text


def inner_product(a: DesignVector, b: DesignVector) -> Fraction:
    """Standard inner product with the points as an orthonormal basis.

    Raises:
        DimensionMismatch: If the vectors have different lengths
    """
    if a.n != b.n:
        raise DimensionMismatch(a.n, b.n)
    return sum((x * y for x, y in zip(a.coords, b.coords)), Fraction(0))


def lift_automorphism(phi: Permutation, a: DesignVector) -> DesignVector:
    """Apply phi linearly: sum a_s s maps to sum a_s phi(s).

    Raises:
        DegreeMismatch: If phi and a have different degrees
    """
    if phi.n != a.n:
        raise DegreeMismatch(a.n, phi.n)
    coords = [Fraction(0)] * a.n
    for i, value in enumerate(a.coords, start=1):
        coords[phi(i) - 1] = value
    return DesignVector(tuple(coords))


def orbit_of_vector(group: PermutationGroup, a: DesignVector) -> list[DesignVector]:
    """Distinct images of ``a`` under the lifted group action, in first-seen order."""
    seen: dict[DesignVector, None] = {}
    for g in group:
        seen.setdefault(lift_automorphism(g, a), None)
    return list(seen)


def random_vector(
    n: int,
    rng: np.random.Generator,
    max_numerator: int = 9,
    max_denominator: int = 5,
) -> DesignVector:
    """Sample a rational vector with bounded numerators and denominators."""
    nums = rng.integers(-max_numerator, max_numerator + 1, size=n)
    dens = rng.integers(1, max_denominator + 1, size=n)
    return DesignVector(tuple(Fraction(int(p), int(q)) for p, q in zip(nums, dens)))

