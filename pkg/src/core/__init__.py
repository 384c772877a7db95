"""Steiner triple systems: definitions, validation, encodings and builtin models."""

from src.core.builtins import builtin_model, printed_representatives
from src.core.codec import parse_design, serialize_json, serialize_text
from src.core.design import (
    OrientationFunction,
    OrientedSTS,
    OrientedTriple,
    SteinerTripleSystem,
    Triple,
    canonical_rotation,
    enumerate_orientations,
    orientation_function,
    validate_sts,
)
from src.core.registry import ModelRegistry

__all__ = [
    "ModelRegistry",
    "OrientationFunction",
    "OrientedSTS",
    "OrientedTriple",
    "SteinerTripleSystem",
    "Triple",
    "builtin_model",
    "canonical_rotation",
    "enumerate_orientations",
    "orientation_function",
    "parse_design",
    "printed_representatives",
    "serialize_json",
    "serialize_text",
    "validate_sts",
]
