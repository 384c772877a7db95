"""Pydantic report models for every command."""

from __future__ import annotations

import json
from typing import Any

from pydantic import BaseModel, Field


def render_json(model: BaseModel) -> str:
    """Deterministic JSON: aliases applied, two-space indent, trailing newline."""
    return json.dumps(model.model_dump(mode="json", by_alias=True), indent=2) + "\n"


class ProfileInfo(BaseModel):
    """Fingerprint of a permutation group."""

    order: int = Field(..., description="Group order")
    is_abelian: bool = Field(..., description="Whether all elements commute")
    exponent: int = Field(..., description="LCM of element orders")
    is_cyclic: bool = Field(..., description="Whether some element generates the group")
    catalog_name: str = Field(..., description="Catalog name, e.g. C7:C3 or He3")


class GroupInfo(BaseModel):
    """A permutation group in cycle notation."""

    degree: int = Field(..., description="Number of points acted on")
    order: int = Field(..., description="Group order")
    generators: list[str] = Field(default_factory=list, description="Generators, cycle notation")
    profile: ProfileInfo | None = Field(default=None, description="Group fingerprint")
    elements: list[str] | None = Field(default=None, description="All elements, when listed")


class OrientationClassInfo(BaseModel):
    """One isomorphism class of orientations."""

    index: int = Field(..., description="1-based class index")
    representative: list[list[int]] = Field(
        ..., description="Oriented triples of the lexicographically least member"
    )
    orbit_size: int = Field(..., description="Number of orientations in the class")
    aut_order: int = Field(..., description="|Aut| of the oriented system")
    profile: str = Field(..., description="Catalog name of the automorphism group")
    generators: list[list[int]] = Field(
        default_factory=list, description="Aut generators as image arrays"
    )
    reflexive: bool = Field(..., description="Isomorphic to its own reversal")
    mirror: int | None = Field(default=None, description="Index of the reversed class")


class RepresentativeMatchInfo(BaseModel):
    """A published representative matched to its computed class."""

    name: str = Field(..., description="Builtin model name")
    printed_aut_order: int = Field(..., description="Automorphism order as published")
    class_index: int | None = Field(default=None, description="Matching class, if any")
    aut_order_matches: bool = Field(..., description="Class aut order equals the printed one")
    witness: str | None = Field(default=None, description="Isomorphism onto the class rep")


class ClassificationInfo(BaseModel):
    """All orientation classes of one Steiner triple system."""

    n: int = Field(..., description="Number of points")
    triples: list[list[int]] = Field(..., description="Sorted triples of the base system")
    base_aut_order: int = Field(..., description="|Aut(S, T)|")
    total_orientations: int = Field(..., description="Sum of orbit sizes, 2^|T|")
    classes: list[OrientationClassInfo] = Field(default_factory=list)
    matches: list[RepresentativeMatchInfo] = Field(default_factory=list)


class AutInfo(BaseModel):
    """Automorphism group of a design."""

    design: str = Field(..., description="Design in text form")
    oriented: bool = Field(..., description="Whether the orientation was respected")
    group: GroupInfo
    reflexive: bool | None = Field(default=None, description="Oriented input only")


class ProductInfo(BaseModel):
    a: list[str] = Field(..., description="Left factor, exact coordinates")
    b: list[str] = Field(..., description="Right factor, exact coordinates")
    product: list[str] = Field(..., description="a x b, exact coordinates")
    symbolic: str = Field(..., description="a x b as a signed sum of basis vectors")
    is_zero: bool


class CompanionInfo(BaseModel):
    w: list[str] = Field(..., description="Multiplier, exact coordinates")
    side: str = Field(..., description="'left' for v -> w x v, 'right' for v -> v x w")
    rank: int = Field(..., description="Exact rank")
    skew_symmetric: bool
    matrix: list[list[str]] = Field(..., description="Rows of the matrix, exact entries")
    kernel: list[list[str]] = Field(default_factory=list, description="Kernel basis vectors")


class ZeroDivisorInfo(BaseModel):
    w: list[str]
    rank: int = Field(..., description="rank(A_w)")
    is_zero_divisor: bool = Field(..., description="rank(A_w) < n - 1")
    witness: list[str] | None = Field(default=None, description="v outside span{w}, w x v = 0")


class CounterexampleInfo(BaseModel):
    v: list[str]
    w: list[str]
    lhs: str = Field(..., description="|v|^2 |w|^2")
    rhs: str = Field(..., description="|v x w|^2 + <v,w>^2")


class AxiomsInfo(BaseModel):
    design: str
    bilinear: bool
    orthogonal: bool
    norm_identity: bool
    is_cross_product: bool
    monomials: int = Field(..., description="Monomials expanded in the norm identity")
    counterexample: CounterexampleInfo | None = None


class RankGrowthInfo(BaseModel):
    w: list[str]
    v: list[str]
    ranks: list[int] = Field(..., description="ranks[k] = dim span{v, ..., L^k v}")
    plateau_k: int
    plateau_rank: int
    exact: bool = Field(..., description="Computed in exact rational arithmetic")


class CheckInfo(BaseModel):
    """One dynamics check. Serialized with the key ``pass``."""

    name: str
    expected: Any
    measured: Any
    passed: bool = Field(..., serialization_alias="pass")
    note: str = ""


class DynamicsInfo(BaseModel):
    w: list[str]
    v: list[str]
    horizon: int
    p: int = Field(..., description="Number of nonzero invariant-space components")
    null_nonzero: bool
    lambdas: list[float] = Field(..., description="Distinct lambda, decreasing")
    exact: bool = Field(..., description="Span checks used exact ranks")
    passed: bool
    checks: list[CheckInfo] = Field(default_factory=list)


class SuiteCheck(BaseModel):
    section: str
    name: str
    passed: bool = Field(..., serialization_alias="pass")
    detail: str = ""


class SuiteInfo(BaseModel):
    """Aggregate result of the acceptance suite."""

    passed: bool
    total: int
    failures: int
    excluded: int = Field(default=0, description="Degenerate dynamics pairs skipped")
    checks: list[SuiteCheck] = Field(default_factory=list)


class ModelInfo(BaseModel):
    name: str
    description: str
    aut_order: int | None = None
