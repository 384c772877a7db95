"""Permutation groups acting on (oriented) Steiner triple systems."""

from src.groups.automorphism import (
    apply,
    are_isomorphic,
    is_reflexive,
    oriented_aut_group,
    reverse_orientation,
    sts_aut_group,
)
from src.groups.classify import (
    ClassificationReport,
    OrientationClass,
    classify_orientations,
    match_representatives,
)
from src.groups.permutation import Permutation, PermutationGroup, generate_group
from src.groups.profile import SubgroupProfile, are_conjugate_subgroups, profile_group

__all__ = [
    "ClassificationReport",
    "OrientationClass",
    "Permutation",
    "PermutationGroup",
    "SubgroupProfile",
    "apply",
    "are_conjugate_subgroups",
    "are_isomorphic",
    "classify_orientations",
    "generate_group",
    "is_reflexive",
    "match_representatives",
    "oriented_aut_group",
    "profile_group",
    "reverse_orientation",
    "sts_aut_group",
]
