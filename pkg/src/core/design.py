"""Steiner triple systems, their orientations and the orientation function."""

from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from src.config import max_triples
from src.core.errors import (
    BadOrder,
    MalformedTriple,
    PairDoubleCovered,
    PairUncovered,
    TooManyTriples,
)

logger = logging.getLogger(__name__)

Point = int


def _check_points(points: Sequence[int], n: int | None = None) -> None:
    if len(points) != 3:
        raise MalformedTriple(f"expected 3 points, got {len(points)}: {list(points)}")
    if any(not isinstance(p, int) or isinstance(p, bool) or p < 1 for p in points):
        raise MalformedTriple(f"points must be positive integers: {list(points)}")
    if len(set(points)) != 3:
        raise MalformedTriple(f"repeated point in {list(points)}")
    if n is not None and max(points) > n:
        raise MalformedTriple(f"point {max(points)} out of range 1..{n}")


@dataclass(frozen=True, order=True)
class Triple:
    """Unordered triple of points, stored ascending."""

    points: tuple[int, int, int]

    @classmethod
    def of(cls, *points: int) -> Triple:
        _check_points(points)
        return cls(tuple(sorted(points)))  # type: ignore[arg-type]

    def __iter__(self) -> Iterator[int]:
        return iter(self.points)

    def __contains__(self, p: object) -> bool:
        return p in self.points

    def third(self, p: int, q: int) -> int:
        """Return the point of the triple other than ``p`` and ``q``."""
        (r,) = (x for x in self.points if x != p and x != q)
        return r

    def pairs(self) -> list[tuple[int, int]]:
        return list(combinations(self.points, 2))

    def __str__(self) -> str:
        return " ".join(str(p) for p in self.points)


@dataclass(frozen=True, order=True)
class OrientedTriple:
    """A cyclic order on a triple, stored with its minimum point first.

    Build instances with :func:`canonical_rotation`; rotations of a cycle then
    compare equal and the reversal does not.
    """

    cycle: tuple[int, int, int]

    @property
    def triple(self) -> Triple:
        return Triple(tuple(sorted(self.cycle)))  # type: ignore[arg-type]

    @property
    def is_ascending(self) -> bool:
        """Whether the cycle is the rotation class of [a,b,c] with a<b<c."""
        return self.cycle[1] < self.cycle[2]

    def reversed(self) -> OrientedTriple:
        a, b, c = self.cycle
        return OrientedTriple((a, c, b))

    def successor(self, p: int) -> int:
        """Point following ``p`` in the cycle, so f(p, successor) = +1."""
        i = self.cycle.index(p)
        return self.cycle[(i + 1) % 3]

    def __iter__(self) -> Iterator[int]:
        return iter(self.cycle)

    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self.cycle) + "]"


def canonical_rotation(cycle: Sequence[int]) -> OrientedTriple:
    """Rotate a 3-cycle so that its minimum point comes first.

    Args:
        cycle: Three distinct points in cyclic order

    Returns:
        The canonical oriented triple

    Raises:
        MalformedTriple: If the cycle does not have three distinct points
    """
    points = tuple(cycle)
    _check_points(points)
    i = points.index(min(points))
    return OrientedTriple(points[i:] + points[:i])  # type: ignore[arg-type]


@dataclass(frozen=True)
class SteinerTripleSystem:
    """A validated Steiner triple system on points 1..n.

    Construct through :func:`validate_sts`; the triples are kept sorted so
    equality is structural.
    """

    n: int
    triples: tuple[Triple, ...]
    _third: dict[tuple[int, int], int] = field(
        default_factory=dict, init=False, repr=False, compare=False, hash=False
    )
    _index: dict[Triple, int] = field(
        default_factory=dict, init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self) -> None:
        for i, t in enumerate(self.triples):
            self._index[t] = i
            for p, q in t.pairs():
                r = t.third(p, q)
                self._third[(p, q)] = r
                self._third[(q, p)] = r

    def __len__(self) -> int:
        return len(self.triples)

    def third(self, p: int, q: int) -> int:
        """Third point of the unique triple through the pair {p, q}."""
        return self._third[(p, q)]

    def triple_through(self, p: int, q: int) -> Triple:
        return Triple.of(p, q, self._third[(p, q)])

    def triple_index(self, t: Triple) -> int:
        return self._index[t]

    def point_degree(self, p: int) -> int:
        """Number of triples containing ``p``."""
        return sum(1 for t in self.triples if p in t)

    def __str__(self) -> str:
        return "{" + ",".join("".join(str(p) for p in t) for t in self.triples) + "}"


def validate_sts(n: int, triples: Iterable[Triple | Sequence[int]]) -> SteinerTripleSystem:
    """Validate a candidate Steiner triple system.

    Args:
        n: Number of points
        triples: Unordered triples, as :class:`Triple` or 3-sequences

    Returns:
        The validated system

    Raises:
        BadOrder: If n < 3 or n is not 1 or 3 mod 6
        MalformedTriple: If a triple is not three distinct points in 1..n
        PairDoubleCovered: If a pair lies in two triples (first such pair reported)
        PairUncovered: If a pair lies in no triple (least such pair reported)
    """
    if n < 3 or n % 6 not in (1, 3):
        raise BadOrder(n)

    normalized: list[Triple] = []
    for t in triples:
        points = tuple(t.points if isinstance(t, Triple) else t)
        _check_points(points, n)
        normalized.append(Triple(tuple(sorted(points))))  # type: ignore[arg-type]

    covered: dict[tuple[int, int], Triple] = {}
    for t in normalized:
        for pair in t.pairs():
            if pair in covered:
                raise PairDoubleCovered(*pair)
            covered[pair] = t

    for pair in combinations(range(1, n + 1), 2):
        if pair not in covered:
            raise PairUncovered(*pair)

    sts = SteinerTripleSystem(n=n, triples=tuple(sorted(normalized)))
    logger.debug(f"Validated STS({n}) with {len(sts)} triples")
    return sts


@dataclass(frozen=True)
class OrientationFunction:
    """Dense skew table f with f(p, q) = +1 when q follows p in its triple."""

    n: int
    table: tuple[tuple[int, ...], ...]

    def __call__(self, p: int, q: int) -> int:
        return self.table[p - 1][q - 1]

    def __neg__(self) -> OrientationFunction:
        return OrientationFunction(self.n, tuple(tuple(-x for x in row) for row in self.table))


@dataclass(frozen=True)
class OrientedSTS:
    """A Steiner triple system with one cyclic order chosen per triple.

    The orientation is stored sorted, so two systems with the same oriented
    triples compare equal.
    """

    base: SteinerTripleSystem
    orientation: tuple[OrientedTriple, ...]

    @property
    def n(self) -> int:
        return self.base.n

    @classmethod
    def build(
        cls, cycles: Iterable[Sequence[int]], n: int | None = None
    ) -> OrientedSTS:
        """Build an oriented system from cycles, validating the underlying STS.

        Args:
            cycles: One 3-cycle per triple
            n: Point count; inferred from the largest point when omitted

        Returns:
            The oriented system
        """
        oriented = [canonical_rotation(c) for c in cycles]
        if n is None:
            n = max((max(o.cycle) for o in oriented), default=0)
        base = validate_sts(n, [o.triple for o in oriented])
        return cls(base=base, orientation=tuple(sorted(oriented)))

    @classmethod
    def on(cls, base: SteinerTripleSystem, cycles: Iterable[Sequence[int]]) -> OrientedSTS:
        """Orient a known system; the cycles must cover exactly its triples."""
        oriented = tuple(sorted(canonical_rotation(c) for c in cycles))
        if sorted(o.triple for o in oriented) != list(base.triples):
            raise MalformedTriple("oriented triples do not match the base system's triples")
        return cls(base=base, orientation=oriented)

    @classmethod
    def from_mask(cls, base: SteinerTripleSystem, mask: int) -> OrientedSTS:
        """Orient ``base`` from a flip mask over its sorted triples.

        Bit i clear gives triple i its ascending cycle [a,b,c]; bit i set gives
        the reversed cycle [a,c,b].
        """
        oriented = []
        for i, t in enumerate(base.triples):
            a, b, c = t.points
            oriented.append(OrientedTriple((a, c, b) if mask >> i & 1 else (a, b, c)))
        return cls(base=base, orientation=tuple(sorted(oriented)))

    def flip_mask(self) -> int:
        mask = 0
        for o in self.orientation:
            if not o.is_ascending:
                mask |= 1 << self.base.triple_index(o.triple)
        return mask

    def reversed(self) -> OrientedSTS:
        """Reverse every cycle."""
        return OrientedSTS(
            base=self.base,
            orientation=tuple(sorted(o.reversed() for o in self.orientation)),
        )

    def f(self, p: int, q: int) -> int:
        return orientation_function(self)(p, q)

    def __iter__(self) -> Iterator[OrientedTriple]:
        return iter(self.orientation)

    def __str__(self) -> str:
        return "{" + ",".join(str(o) for o in self.orientation) + "}"


@lru_cache(maxsize=256)
def orientation_function(o: OrientedSTS) -> OrientationFunction:
    """Tabulate the orientation function of an oriented system."""
    n = o.n
    table = [[0] * n for _ in range(n)]
    for ot in o.orientation:
        for i in range(3):
            p, q = ot.cycle[i], ot.cycle[(i + 1) % 3]
            table[p - 1][q - 1] = 1
            table[q - 1][p - 1] = -1
    return OrientationFunction(n=n, table=tuple(tuple(row) for row in table))


def enumerate_orientations(
    sts: SteinerTripleSystem, cap: int | None = None
) -> Iterator[OrientedSTS]:
    """Yield all 2^|T| orientations of ``sts`` in flip-mask order.

    Args:
        sts: The base system
        cap: Maximum triple count; defaults to :func:`src.config.max_triples`

    Yields:
        Each oriented system once, mask 0 (all ascending) first

    Raises:
        TooManyTriples: If |T| exceeds the cap
    """
    limit = max_triples() if cap is None else cap
    if len(sts) > limit:
        raise TooManyTriples(len(sts), limit)
    logger.debug(f"Enumerating {1 << len(sts)} orientations of STS({sts.n})")
    for mask in range(1 << len(sts)):
        yield OrientedSTS.from_mask(sts, mask)
