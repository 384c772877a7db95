"""Registry of named builtin designs."""

from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import dataclass

from src.core.design import OrientedSTS, SteinerTripleSystem
from src.core.errors import UnknownModel

logger = logging.getLogger(__name__)

Design = SteinerTripleSystem | OrientedSTS


@dataclass(frozen=True)
class ModelEntry:
    """A registered model: a factory plus a one-line description."""

    name: str
    factory: Callable[[], Design]
    description: str = ""
    aut_order: int | None = None


class ModelRegistry:
    """Registry mapping model names to design factories.

    Usage:
        # Register a model
        ModelRegistry.register("sts3", lambda: validate_sts(3, [(1, 2, 3)]))

        # Resolve it (built once, then cached)
        sts = ModelRegistry.get("sts3")
    """

    _entries: dict[str, ModelEntry] = {}
    _cache: dict[str, Design] = {}

    @classmethod
    def register(
        cls,
        name: str,
        factory: Callable[[], Design],
        description: str = "",
        aut_order: int | None = None,
    ) -> None:
        """Register a model factory.

        Args:
            name: Lookup name (e.g., 'o1_7')
            factory: Zero-argument callable building the design
            description: Short human-readable description
            aut_order: Printed automorphism group order, when known
        """
        cls._entries[name] = ModelEntry(name, factory, description, aut_order)
        cls._cache.pop(name, None)

    @classmethod
    def get(cls, name: str) -> Design:
        """Build (or return the cached) design registered under ``name``.

        Raises:
            UnknownModel: If no model is registered under ``name``
        """
        if name in cls._cache:
            return cls._cache[name]
        entry = cls._entries.get(name)
        if entry is None:
            raise UnknownModel(name)
        design = entry.factory()
        cls._cache[name] = design
        logger.debug(f"Built builtin model {name}")
        return design

    @classmethod
    def entry(cls, name: str) -> ModelEntry:
        if name not in cls._entries:
            raise UnknownModel(name)
        return cls._entries[name]

    @classmethod
    def names(cls) -> list[str]:
        """List registered names in registration order."""
        return list(cls._entries)

    @classmethod
    def clear(cls) -> None:
        """Clear all registered models (for testing)."""
        cls._entries.clear()
        cls._cache.clear()
