"""Permutations of 1..n and explicitly listed permutation groups."""

from __future__ import annotations

import logging
import re
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from math import lcm

from src.core.errors import DegreeMismatch, SteinerError

logger = logging.getLogger(__name__)

_CYCLE = re.compile(r"\(([^()]*)\)")


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of 1..n stored as its image list, ``images[i-1] = phi(i)``.

    Composition follows function notation: ``(p * q)(x) == p(q(x))``.
    """

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise SteinerError(f"not a permutation of 1..{len(self.images)}: {self.images}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> Permutation:
        images = list(range(1, n + 1))
        for cycle in cycles:
            for i, p in enumerate(cycle):
                if not 1 <= p <= n:
                    raise DegreeMismatch(n, p)
                images[p - 1] = cycle[(i + 1) % len(cycle)]
        return cls(tuple(images))

    @classmethod
    def parse(cls, text: str, n: int) -> Permutation:
        """Parse cycle notation such as ``(2,4,6)(3,5,7)``; ``()`` is the identity.

        Single-digit cycles may omit commas, as in ``(274)(365)``.
        """
        cycles: list[list[int]] = []
        for body in _CYCLE.findall(text):
            body = body.strip()
            if not body:
                continue
            parts = body.split(",") if "," in body else body.split() if " " in body else body
            cycles.append([int(p) for p in parts])
        if not cycles and "(" not in text:
            raise SteinerError(f"invalid cycle notation: {text!r}")
        return cls.from_cycles(cycles, n)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, p: int) -> int:
        return self.images[p - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if other.n != self.n:
            raise DegreeMismatch(self.n, other.n)
        return Permutation(tuple(self.images[q - 1] for q in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, p in enumerate(self.images, start=1):
            inv[p - 1] = i
        return Permutation(tuple(inv))

    @property
    def is_identity(self) -> bool:
        return all(p == i for i, p in enumerate(self.images, start=1))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least point, ordered by that point."""
        seen: set[int] = set()
        result: list[tuple[int, ...]] = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            p = self(start)
            while p != start:
                cycle.append(p)
                seen.add(p)
                p = self(p)
            if len(cycle) > 1:
                result.append(tuple(cycle))
        return result

    def order(self) -> int:
        return lcm(*(len(c) for c in self.cycles())) if not self.is_identity else 1

    def cycle_notation(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + ",".join(str(p) for p in c) + ")" for c in cycles)

    def matrix(self) -> tuple[tuple[int, ...], ...]:
        """Permutation matrix P with P[phi(i)][i] = 1 (1-based), so P e_i = e_phi(i)."""
        rows = [[0] * self.n for _ in range(self.n)]
        for i, p in enumerate(self.images):
            rows[p - 1][i] = 1
        return tuple(tuple(r) for r in rows)

    def __str__(self) -> str:
        return self.cycle_notation()


@dataclass(frozen=True)
class PermutationGroup:
    """A finite permutation group stored as its sorted element list."""

    n: int
    elements: tuple[Permutation, ...]
    generators: tuple[Permutation, ...] = ()
    _members: frozenset[Permutation] = field(
        default=frozenset(), init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self) -> None:
        object.__setattr__(self, "_members", frozenset(self.elements))

    @classmethod
    def from_elements(
        cls, n: int, elements: Iterable[Permutation], generators: Sequence[Permutation] = ()
    ) -> PermutationGroup:
        elems = tuple(sorted(set(elements)))
        for g in elems:
            if g.n != n:
                raise DegreeMismatch(n, g.n)
        group = cls(n=n, elements=elems, generators=tuple(generators))
        if not generators:
            group = cls(n=n, elements=elems, generators=tuple(small_generating_set(group)))
        return group

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements)

    def __contains__(self, g: object) -> bool:
        return g in self._members

    def element_set(self) -> frozenset[Permutation]:
        return self._members

    def is_subgroup_of(self, other: PermutationGroup) -> bool:
        return self.n == other.n and self._members <= other._members


def generate_group(n: int, generators: Iterable[Permutation]) -> PermutationGroup:
    """Close a generator set under composition.

    Args:
        n: Degree
        generators: Generating permutations (may be empty)

    Returns:
        The generated group, with ``generators`` recorded as given
    """
    gens = list(generators)
    for g in gens:
        if g.n != n:
            raise DegreeMismatch(n, g.n)
    elements = _closure(n, gens)
    logger.debug(f"Generated group of order {len(elements)} from {len(gens)} generators")
    return PermutationGroup(n=n, elements=tuple(sorted(elements)), generators=tuple(gens))


def _closure(n: int, gens: Sequence[Permutation]) -> set[Permutation]:
    identity = Permutation.identity(n)
    found = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                gh = g * h
                if gh not in found:
                    found.add(gh)
                    nxt.append(gh)
        frontier = nxt
    return found


def small_generating_set(group: PermutationGroup) -> list[Permutation]:
    """Greedy generating set: scan elements by descending order, keep those outside the span."""
    target = group.order
    gens: list[Permutation] = []
    span = {Permutation.identity(group.n)}
    for g in sorted(group.elements, key=lambda x: (-x.order(), x)):
        if len(span) == target:
            break
        if g in span:
            continue
        gens.append(g)
        span = _closure(group.n, gens)
    return gens
