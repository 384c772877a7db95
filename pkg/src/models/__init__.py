"""Pydantic report models."""

from src.models.schemas import (
    AutInfo,
    AxiomsInfo,
    CheckInfo,
    ClassificationInfo,
    CompanionInfo,
    CounterexampleInfo,
    DynamicsInfo,
    GroupInfo,
    ModelInfo,
    OrientationClassInfo,
    ProductInfo,
    ProfileInfo,
    RankGrowthInfo,
    RepresentativeMatchInfo,
    SuiteCheck,
    SuiteInfo,
    ZeroDivisorInfo,
    render_json,
)

__all__ = [
    "AutInfo",
    "AxiomsInfo",
    "CheckInfo",
    "ClassificationInfo",
    "CompanionInfo",
    "CounterexampleInfo",
    "DynamicsInfo",
    "GroupInfo",
    "ModelInfo",
    "OrientationClassInfo",
    "ProductInfo",
    "ProfileInfo",
    "RankGrowthInfo",
    "RepresentativeMatchInfo",
    "SuiteCheck",
    "SuiteInfo",
    "ZeroDivisorInfo",
    "render_json",
]
