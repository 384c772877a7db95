"""Classification of all orientations of a Steiner triple system."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass

from src.config import DEFAULT_EXHAUSTIVE_DEGREE, max_triples
from src.core.design import OrientedSTS, SteinerTripleSystem
from src.core.errors import TooManyTriples
from src.groups.automorphism import (
    act_on_mask,
    apply_mask,
    are_isomorphic,
    oriented_aut_group,
    reverse_orientation,
    sts_aut_group,
)
from src.groups.permutation import Permutation, PermutationGroup
from src.groups.profile import SubgroupProfile, profile_group

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OrientationClass:
    """One isomorphism class of orientations.

    ``index`` and ``mirror`` are 1-based positions in the report; ``mirror``
    is None for reflexive classes.
    """

    index: int
    representative: OrientedSTS
    orbit_size: int
    aut: PermutationGroup
    profile: SubgroupProfile
    reflexive: bool
    mirror: int | None


@dataclass(frozen=True)
class ClassificationReport:
    sts: SteinerTripleSystem
    base_aut_order: int
    classes: tuple[OrientationClass, ...]

    @property
    def total_orientations(self) -> int:
        return sum(c.orbit_size for c in self.classes)


@dataclass(frozen=True)
class RepresentativeMatch:
    """A published representative matched to its computed class."""

    name: str
    printed_aut_order: int
    class_index: int | None
    witness: Permutation | None


def _orbits(sts: SteinerTripleSystem, base_aut: PermutationGroup) -> list[list[int]]:
    actions = [apply_mask(g, sts) for g in base_aut]
    seen = bytearray(1 << len(sts))
    orbits: list[list[int]] = []
    for mask in range(1 << len(sts)):
        if seen[mask]:
            continue
        orbit = sorted({act_on_mask(action, mask) for action in actions})
        for member in orbit:
            seen[member] = 1
        orbits.append(orbit)
    return orbits


def classify_orientations(
    sts: SteinerTripleSystem,
    base_aut: PermutationGroup | None = None,
    cap: int | None = None,
    exhaustive_degree: int = DEFAULT_EXHAUSTIVE_DEGREE,
) -> ClassificationReport:
    """Partition the 2^|T| orientations of ``sts`` into isomorphism classes.

    Orbits are taken under Aut(S, T) acting on flip masks. Each class is
    represented by its lexicographically least member; classes are sorted by
    descending automorphism order, then representative.

    Args:
        sts: The base system
        base_aut: Aut(S, T), computed when omitted
        cap: Maximum triple count; defaults to :func:`src.config.max_triples`
        exhaustive_degree: Passed to :func:`sts_aut_group` when base_aut is omitted

    Returns:
        The classification report

    Raises:
        TooManyTriples: If |T| exceeds the cap
    """
    limit = max_triples() if cap is None else cap
    if len(sts) > limit:
        raise TooManyTriples(len(sts), limit)
    if base_aut is None:
        base_aut = sts_aut_group(sts, exhaustive_degree=exhaustive_degree)

    orbits = _orbits(sts, base_aut)
    logger.info(f"STS({sts.n}): {len(orbits)} orientation classes under |Aut|={base_aut.order}")

    drafts = []
    for orbit in orbits:
        members = [OrientedSTS.from_mask(sts, m) for m in orbit]
        rep = min(members, key=lambda o: o.orientation)
        aut = oriented_aut_group(rep, base_aut)
        drafts.append((rep, len(orbit), aut, frozenset(orbit)))
    drafts.sort(key=lambda d: (-d[2].order, d[0].orientation))

    class_of_mask = {m: i for i, d in enumerate(drafts) for m in d[3]}
    classes = []
    for i, (rep, size, aut, _) in enumerate(drafts):
        mirror_rep = reverse_orientation(rep)
        j = class_of_mask[mirror_rep.flip_mask()]
        if j != i and are_isomorphic(mirror_rep, drafts[j][0], base_aut) is None:
            raise AssertionError(f"mirror of class {i + 1} not isomorphic to class {j + 1}")
        classes.append(
            OrientationClass(
                index=i + 1,
                representative=rep,
                orbit_size=size,
                aut=aut,
                profile=profile_group(aut),
                reflexive=i == j,
                mirror=None if i == j else j + 1,
            )
        )

    return ClassificationReport(sts=sts, base_aut_order=base_aut.order, classes=tuple(classes))


def match_representatives(
    report: ClassificationReport,
    printed: Sequence[tuple[str, OrientedSTS, int]],
) -> list[RepresentativeMatch]:
    """Match published representatives to computed classes by isomorphism.

    Args:
        report: Classification of the shared base system
        printed: (name, oriented system, printed aut order) triples

    Returns:
        One match per printed representative; ``class_index`` is None when no
        class is isomorphic
    """
    base_aut = sts_aut_group(report.sts)
    matches = []
    for name, o, order in printed:
        found: tuple[int | None, Permutation | None] = (None, None)
        for c in report.classes:
            witness = are_isomorphic(o, c.representative, base_aut)
            if witness is not None:
                found = (c.index, witness)
                break
        matches.append(RepresentativeMatch(name, order, found[0], found[1]))
    return matches
