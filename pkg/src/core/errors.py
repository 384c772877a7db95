"""Exception hierarchy shared by every module.

All errors derive from ``ValueError`` so callers that only know about invalid
input keep working. Each class carries a stable ``code`` (the class name) and
the process exit code the CLI maps it to.
"""

from __future__ import annotations

EXIT_CHECK_FAILED = 1
EXIT_INVALID_INPUT = 2
EXIT_RESOURCE_CAP = 3


class SteinerError(ValueError):
    """Base class for all library errors."""

    exit_code: int = EXIT_INVALID_INPUT

    @property
    def code(self) -> str:
        return type(self).__name__


# Design validation


class BadOrder(SteinerError):
    """Point count is not admissible for a Steiner triple system."""

    def __init__(self, n: int):
        self.n = n
        super().__init__(f"n={n} is not congruent to 1 or 3 mod 6")


class MalformedTriple(SteinerError):
    """A triple or cycle does not consist of three distinct in-range points."""


class PairUncovered(SteinerError):
    """A pair of points lies in no triple."""

    def __init__(self, p: int, q: int):
        self.pair = (p, q)
        super().__init__(f"pair ({p},{q}) is not covered by any triple")


class PairDoubleCovered(SteinerError):
    """A pair of points lies in more than one triple."""

    def __init__(self, p: int, q: int):
        self.pair = (p, q)
        super().__init__(f"pair ({p},{q}) is covered by more than one triple")


class TooManyTriples(SteinerError):
    """Enumerating 2^|T| orientations would exceed the configured cap."""

    exit_code = EXIT_RESOURCE_CAP

    def __init__(self, count: int, cap: int):
        self.count = count
        self.cap = cap
        super().__init__(f"{count} triples exceeds the enumeration cap of {cap}")


class UnknownModel(SteinerError):
    """No builtin model is registered under the requested name."""

    def __init__(self, name: str):
        self.name = name
        super().__init__(f"unknown builtin model: {name}")


class DesignSyntaxError(SteinerError):
    """Text or JSON input could not be parsed."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


# Group action


class DegreeMismatch(SteinerError):
    """Permutation and design act on different point counts."""

    def __init__(self, expected: int, actual: int):
        self.expected = expected
        self.actual = actual
        super().__init__(f"degree mismatch: expected {expected}, got {actual}")


class DegreeTooLarge(SteinerError):
    """No enabled automorphism strategy can handle this degree."""

    exit_code = EXIT_RESOURCE_CAP

    def __init__(self, n: int):
        self.n = n
        super().__init__(f"degree {n} exceeds the exhaustive cap and backtracking is disabled")


class NotSubgroup(SteinerError):
    """A group passed as a subgroup is not contained in the ambient group."""


# Algebra


class DimensionMismatch(SteinerError):
    """Vectors or matrices have incompatible dimensions."""

    def __init__(self, expected: int, actual: int):
        self.expected = expected
        self.actual = actual
        super().__init__(f"dimension mismatch: expected {expected}, got {actual}")


class ZeroVector(SteinerError):
    """Operation requires a nonzero vector."""


# Dynamics


class NotSkewSymmetric(SteinerError):
    """Matrix fails the skew-symmetry tolerance."""


class NonFiniteVector(SteinerError):
    """Float input contains NaN or infinity."""


class DegenerateSpectrum(SteinerError):
    """Eigenvalue clustering is ambiguous at the configured tolerance."""

    exit_code = EXIT_CHECK_FAILED
