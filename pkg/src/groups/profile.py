"""Fingerprints of small permutation groups and subgroup conjugacy."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import lcm

from src.core.errors import NotSubgroup, SteinerError
from src.groups.permutation import Permutation, PermutationGroup

logger = logging.getLogger(__name__)

MAX_PROFILE_ORDER = 10_000


@dataclass(frozen=True)
class SubgroupProfile:
    """Order, commutativity, exponent and cyclicity with a catalog name."""

    order: int
    is_abelian: bool
    exponent: int
    is_cyclic: bool
    catalog_name: str


def catalog_name(order: int, is_abelian: bool, exponent: int, is_cyclic: bool) -> str:
    """Name a group from its fingerprint, or report it as unknown."""
    if order == 1:
        return "C1"
    if order == 3:
        return "C3"
    if order == 6 and not is_abelian:
        return "S3"
    if order == 9 and is_abelian:
        return "C9" if exponent == 9 else "C3xC3"
    if order == 21 and not is_abelian:
        return "C7:C3"
    if order == 27 and not is_abelian and exponent == 3:
        return "He3"
    if order == 168 and not is_abelian:
        return "order-168 (GL(3,F2))"
    if order == 432 and not is_abelian:
        return "order-432 (Aff(2,F3))"
    kind = "abelian" if is_abelian else "nonabelian"
    return f"unknown({order},{kind},{exponent})"


def profile_group(g: PermutationGroup) -> SubgroupProfile:
    """Fingerprint a group by direct iteration over its elements.

    Raises:
        SteinerError: If the group has more than 10^4 elements
    """
    if g.order > MAX_PROFILE_ORDER:
        raise SteinerError(f"group of order {g.order} is too large to profile")
    elements = g.elements
    abelian = all(a * b == b * a for i, a in enumerate(elements) for b in elements[i + 1 :])
    orders = [x.order() for x in elements]
    exponent = lcm(*orders)
    cyclic = g.order in orders
    profile = SubgroupProfile(
        order=g.order,
        is_abelian=abelian,
        exponent=exponent,
        is_cyclic=cyclic,
        catalog_name=catalog_name(g.order, abelian, exponent, cyclic),
    )
    logger.debug(f"Profiled group: {profile}")
    return profile


def conjugate(h: PermutationGroup, x: Permutation) -> frozenset[Permutation]:
    """The element set x h x^-1."""
    x_inv = x.inverse()
    return frozenset(x * a * x_inv for a in h)


def are_conjugate_subgroups(
    h: PermutationGroup, k: PermutationGroup, g: PermutationGroup
) -> Permutation | None:
    """Find x in g with x h x^-1 = k.

    Returns:
        The least such x in g's element order, or None

    Raises:
        NotSubgroup: If h or k is not contained in g
    """
    if not h.is_subgroup_of(g):
        raise NotSubgroup("first group is not contained in the ambient group")
    if not k.is_subgroup_of(g):
        raise NotSubgroup("second group is not contained in the ambient group")
    if h.order != k.order:
        return None
    target = k.element_set()
    for x in g:
        if conjugate(h, x) == target:
            return x
    return None
