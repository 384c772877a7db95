"""Automorphisms, the permutation action and isomorphism of oriented systems."""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterator
from functools import lru_cache
from itertools import permutations

from src.config import DEFAULT_EXHAUSTIVE_DEGREE
from src.core.design import (
    OrientedSTS,
    OrientedTriple,
    SteinerTripleSystem,
    canonical_rotation,
    orientation_function,
    validate_sts,
)
from src.core.errors import DegreeMismatch, DegreeTooLarge
from src.groups.permutation import Permutation, PermutationGroup

logger = logging.getLogger(__name__)

# Consistency test used by the backtracking search: (partial images, p, k) -> ok
PairCheck = Callable[[list[int], int, int], bool]


@lru_cache(maxsize=32)
def sts_aut_group(
    sts: SteinerTripleSystem,
    exhaustive_degree: int = DEFAULT_EXHAUSTIVE_DEGREE,
    backtracking: bool = True,
) -> PermutationGroup:
    """Compute Aut(S, T), the permutations mapping triples to triples.

    Args:
        sts: The system
        exhaustive_degree: Largest n scanned over all of S_n
        backtracking: Whether larger n may use the backtracking search

    Returns:
        The full automorphism group

    Raises:
        DegreeTooLarge: If n exceeds the exhaustive cap and backtracking is disabled
    """
    if sts.n <= exhaustive_degree:
        elements = list(_exhaustive_automorphisms(sts))
        strategy = "exhaustive"
    elif backtracking:
        elements = list(_search(sts.n, _preserves_triples(sts, sts)))
        strategy = "backtracking"
    else:
        raise DegreeTooLarge(sts.n)
    logger.info(f"Aut(STS({sts.n})) has order {len(elements)} ({strategy})")
    return PermutationGroup.from_elements(sts.n, elements)


def _exhaustive_automorphisms(sts: SteinerTripleSystem) -> Iterator[Permutation]:
    triples = {frozenset(t.points) for t in sts.triples}
    points = tuple(t.points for t in sts.triples)
    for images in permutations(range(1, sts.n + 1)):
        if all(
            frozenset((images[a - 1], images[b - 1], images[c - 1])) in triples
            for a, b, c in points
        ):
            yield Permutation(images)


def _preserves_triples(src: SteinerTripleSystem, dst: SteinerTripleSystem) -> PairCheck:
    def check(images: list[int], p: int, k: int) -> bool:
        r = src.third(p, k)
        return r > k or images[r - 1] == dst.third(images[p - 1], images[k - 1])

    return check


def _search(n: int, check: PairCheck, first_only: bool = False) -> Iterator[Permutation]:
    """Backtrack over images of 1, 2, ..., n, pruning pairs as soon as both ends are set.

    When point k is assigned, every p < k is checked against k.
    """
    assigned = [0] * n
    used = [False] * (n + 1)

    def extend(k: int) -> Iterator[Permutation]:
        if k > n:
            yield Permutation(tuple(assigned))
            return
        for image in range(1, n + 1):
            if used[image]:
                continue
            assigned[k - 1] = image
            if all(check(assigned, p, k) for p in range(1, k)):
                used[image] = True
                yield from extend(k + 1)
                used[image] = False
            assigned[k - 1] = 0

    for perm in extend(1):
        yield perm
        if first_only:
            return


def apply(phi: Permutation, o: OrientedSTS) -> OrientedSTS:
    """Map every oriented triple pointwise and re-canonicalize.

    Raises:
        DegreeMismatch: If phi and o act on different point counts
    """
    if phi.n != o.n:
        raise DegreeMismatch(o.n, phi.n)
    if phi.is_identity:
        return o
    cycles = [canonical_rotation([phi(p) for p in ot.cycle]) for ot in o.orientation]
    image_triples = sorted(c.triple for c in cycles)
    base = o.base if image_triples == list(o.base.triples) else validate_sts(o.n, image_triples)
    return OrientedSTS(base=base, orientation=tuple(sorted(cycles)))


def apply_mask(phi: Permutation, sts: SteinerTripleSystem) -> tuple[list[int], list[int]]:
    """Describe phi in Aut(S, T) as an action on flip masks.

    Returns:
        (targets, flips): ascending triple i maps to triple ``targets[i]``, and
        lands on that triple's reversed cycle exactly when ``flips[i]`` is 1
    """
    targets: list[int] = []
    flips: list[int] = []
    for t in sts.triples:
        image: OrientedTriple = canonical_rotation([phi(p) for p in t.points])
        targets.append(sts.triple_index(image.triple))
        flips.append(0 if image.is_ascending else 1)
    return targets, flips


def act_on_mask(action: tuple[list[int], list[int]], mask: int) -> int:
    targets, flips = action
    out = 0
    for i, target in enumerate(targets):
        if (mask >> i & 1) ^ flips[i]:
            out |= 1 << target
    return out


def oriented_aut_group(o: OrientedSTS, base_aut: PermutationGroup) -> PermutationGroup:
    """Stabilizer of ``o`` inside ``base_aut`` = Aut(S, T)."""
    if base_aut.n != o.n:
        raise DegreeMismatch(o.n, base_aut.n)
    stabilizer = [g for g in base_aut if apply(g, o) == o]
    return PermutationGroup.from_elements(o.n, stabilizer)


def reverse_orientation(o: OrientedSTS) -> OrientedSTS:
    return o.reversed()


def are_isomorphic(
    o1: OrientedSTS,
    o2: OrientedSTS,
    base_aut: PermutationGroup | None = None,
) -> Permutation | None:
    """Find phi with apply(phi, o1) == o2.

    Over a shared base system only Aut(S, T) is searched; otherwise a full
    backtracking search over bijections runs, pruned on triples and
    orientation signs.

    Args:
        o1: Source system
        o2: Target system
        base_aut: Aut(S, T) of the shared base, reused when available

    Returns:
        A witnessing permutation, or None

    Raises:
        DegreeMismatch: If the systems have different point counts
    """
    if o1.n != o2.n:
        raise DegreeMismatch(o1.n, o2.n)
    if o1 == o2:
        return Permutation.identity(o1.n)

    if o1.base == o2.base:
        group = base_aut if base_aut is not None else sts_aut_group(o1.base)
        for g in group:
            if apply(g, o1) == o2:
                return g
        return None

    f1 = orientation_function(o1)
    f2 = orientation_function(o2)
    triples = _preserves_triples(o1.base, o2.base)

    def check(images: list[int], p: int, k: int) -> bool:
        return f1(p, k) == f2(images[p - 1], images[k - 1]) and triples(images, p, k)

    for phi in _search(o1.n, check, first_only=True):
        return phi
    return None


def is_reflexive(o: OrientedSTS, base_aut: PermutationGroup | None = None) -> bool:
    """Whether ``o`` is isomorphic to its total reversal."""
    return are_isomorphic(o, reverse_orientation(o), base_aut) is not None
