"""Build report models from library results."""

from __future__ import annotations

from src.algebra.axioms import CrossAxiomReport
from src.algebra.product import CompanionMatrix, ZeroDivisorResult
from src.algebra.vectors import DesignVector
from src.dynamics.iteration import RankGrowth, VectorLike, as_float_vector
from src.dynamics.theorem import DynamicsReport
from src.groups.classify import ClassificationReport, RepresentativeMatch
from src.groups.permutation import PermutationGroup
from src.groups.profile import SubgroupProfile, profile_group
from src.models.schemas import (
    AxiomsInfo,
    CheckInfo,
    ClassificationInfo,
    CompanionInfo,
    CounterexampleInfo,
    DynamicsInfo,
    GroupInfo,
    OrientationClassInfo,
    ProfileInfo,
    RankGrowthInfo,
    RepresentativeMatchInfo,
    ZeroDivisorInfo,
)


def vector_strings(x: VectorLike, n: int) -> list[str]:
    """Exact strings for rationals, repr for floats."""
    if isinstance(x, DesignVector):
        return x.to_strings()
    return [repr(float(c)) for c in as_float_vector(x, n)]


def profile_info(profile: SubgroupProfile) -> ProfileInfo:
    return ProfileInfo(
        order=profile.order,
        is_abelian=profile.is_abelian,
        exponent=profile.exponent,
        is_cyclic=profile.is_cyclic,
        catalog_name=profile.catalog_name,
    )


def group_info(group: PermutationGroup, list_elements: bool = False) -> GroupInfo:
    return GroupInfo(
        degree=group.n,
        order=group.order,
        generators=[g.cycle_notation() for g in group.generators],
        profile=profile_info(profile_group(group)),
        elements=[g.cycle_notation() for g in group] if list_elements else None,
    )


def classification_info(
    report: ClassificationReport, matches: list[RepresentativeMatch] | None = None
) -> ClassificationInfo:
    classes = [
        OrientationClassInfo(
            index=c.index,
            representative=[list(t.cycle) for t in c.representative.orientation],
            orbit_size=c.orbit_size,
            aut_order=c.aut.order,
            profile=c.profile.catalog_name,
            generators=[list(g.images) for g in c.aut.generators],
            reflexive=c.reflexive,
            mirror=c.mirror,
        )
        for c in report.classes
    ]
    orders = {c.index: c.aut.order for c in report.classes}
    match_infos = [
        RepresentativeMatchInfo(
            name=m.name,
            printed_aut_order=m.printed_aut_order,
            class_index=m.class_index,
            aut_order_matches=orders.get(m.class_index) == m.printed_aut_order,
            witness=m.witness.cycle_notation() if m.witness is not None else None,
        )
        for m in matches or []
    ]
    return ClassificationInfo(
        n=report.sts.n,
        triples=[list(t.points) for t in report.sts.triples],
        base_aut_order=report.base_aut_order,
        total_orientations=report.total_orientations,
        classes=classes,
        matches=match_infos,
    )


def companion_info(w: DesignVector, a: CompanionMatrix, side: str) -> CompanionInfo:
    return CompanionInfo(
        w=w.to_strings(),
        side=side,
        rank=a.rank(),
        skew_symmetric=a.is_skew_symmetric(),
        matrix=a.to_strings(),
        kernel=[k.to_strings() for k in a.kernel()],
    )


def zero_divisor_info(w: DesignVector, result: ZeroDivisorResult) -> ZeroDivisorInfo:
    return ZeroDivisorInfo(
        w=w.to_strings(),
        rank=result.rank,
        is_zero_divisor=result.is_zero_divisor,
        witness=result.witness.to_strings() if result.witness is not None else None,
    )


def axioms_info(design: str, report: CrossAxiomReport) -> AxiomsInfo:
    ce = report.counterexample
    return AxiomsInfo(
        design=design,
        bilinear=report.bilinear,
        orthogonal=report.orthogonal,
        norm_identity=report.norm_identity,
        is_cross_product=report.is_cross_product,
        monomials=report.monomials,
        counterexample=(
            CounterexampleInfo(
                v=ce.v.to_strings(), w=ce.w.to_strings(), lhs=str(ce.lhs), rhs=str(ce.rhs)
            )
            if ce is not None
            else None
        ),
    )


def rank_growth_info(n: int, w: VectorLike, v: VectorLike, growth: RankGrowth) -> RankGrowthInfo:
    return RankGrowthInfo(
        w=vector_strings(w, n),
        v=vector_strings(v, n),
        ranks=list(growth.ranks),
        plateau_k=growth.plateau_k,
        plateau_rank=growth.plateau_rank,
        exact=growth.exact,
    )


def dynamics_info(
    w: VectorLike, v: VectorLike, horizon: int, report: DynamicsReport
) -> DynamicsInfo:
    return DynamicsInfo(
        w=vector_strings(w, report.n),
        v=vector_strings(v, report.n),
        horizon=horizon,
        p=report.p,
        null_nonzero=report.null_nonzero,
        lambdas=list(report.lambdas),
        exact=report.exact,
        passed=report.passed,
        checks=[
            CheckInfo(
                name=c.name,
                expected=c.expected,
                measured=c.measured,
                passed=c.passed,
                note=c.note,
            )
            for c in report.checks
        ],
    )
