"""
Operad registry for selector-based lookup.

This module provides:
- OperadRegistry: Central registry for the base operads
- @register_operad: Decorator for automatic operad registration
- get_registry(): Access to global registry
- resolve_operad(): Selector resolution, including composition operads
  such as "box:nap" or "diamond:box:com"
"""

import logging
from typing import Dict, List, Tuple

from ..core.errors import OperadNotFoundError
from .base import Operad

logger = logging.getLogger(__name__)

COMPOSITION_KINDS = ("box", "diamond")


class OperadRegistry:
    """
    Central registry for all operads.

    Base operads register themselves with @register_operad when their module
    is imported. Composition operads are built on first request and cached.

    Example:
        ```python
        registry = get_registry()

        nap = registry.get("nap")
        box_nap = registry.resolve("box:nap")
        names = registry.list_names()
        ```
    """

    def __init__(self):
        """Initialize empty registry"""
        self._operads: Dict[str, Operad] = {}
        self._composites: Dict[str, Operad] = {}
        logger.debug("Operad registry initialized")

    def register(self, operad: Operad) -> None:
        """
        Register an operad in the registry.

        Args:
            operad: Operad instance to register

        Raises:
            ValueError: If an operad with the same name is already registered
        """
        if operad.name in self._operads:
            raise ValueError(
                f"Operad '{operad.name}' is already registered. "
                f"Existing: {self._operads[operad.name].__class__.__name__}, "
                f"New: {operad.__class__.__name__}"
            )
        self._operads[operad.name] = operad
        logger.debug(f"Registered operad: {operad.name}")

    def get(self, name: str) -> Operad:
        """
        Get a base operad by name.

        Raises:
            OperadNotFoundError: If no operad has that name
        """
        if name not in self._operads:
            available = ", ".join(self.list_names())
            raise OperadNotFoundError(
                f"Operad '{name}' not found. Available operads: {available} "
                f"(or box:<q>, diamond:<q>)"
            )
        return self._operads[name]

    def resolve(self, selector: str) -> Operad:
        """
        Resolve a selector to an operad.

        Args:
            selector: A base name, or "box:<q>" / "diamond:<q>" for the
                composition operads (NAP∘q, □) and (Mag∘q, ◇)

        Raises:
            OperadNotFoundError: If a name in the selector is unknown
        """
        selector = selector.strip()
        kind, _, inner = selector.partition(":")
        if not inner:
            return self.get(selector)
        if kind not in COMPOSITION_KINDS:
            raise OperadNotFoundError(
                f"Unknown composition kind '{kind}' in '{selector}'. "
                f"Available kinds: {', '.join(COMPOSITION_KINDS)}"
            )
        if selector not in self._composites:
            from ..composition.operad import CompositionOperad

            self._composites[selector] = CompositionOperad(kind, self.resolve(inner))
            logger.info(f"Built composition operad {selector}")
        return self._composites[selector]

    def list_operads(self) -> List[Operad]:
        return list(self._operads.values())

    def list_names(self) -> List[str]:
        return list(self._operads)

    def __len__(self) -> int:
        """Return number of registered base operads"""
        return len(self._operads)

    def __contains__(self, name: str) -> bool:
        """Check if a base operad is registered"""
        return name in self._operads


# Global registry instance
_registry = OperadRegistry()


def register_operad(cls):
    """
    Decorator to automatically register an operad.

    Instantiates the class and registers the instance when the module is
    imported.

    Args:
        cls: Operad class to register

    Returns:
        The same class (unmodified)
    """
    _registry.register(cls())
    return cls


def get_registry() -> OperadRegistry:
    """
    Get the global operad registry.

    Returns:
        Global OperadRegistry instance
    """
    return _registry


def resolve_operad(selector: str) -> Operad:
    """Resolve a selector against the global registry"""
    return _registry.resolve(selector)


def operad_instances() -> Tuple[Operad, Operad, Operad, Operad]:
    """The four tree operads: NAP, Pre-Lie, Mag with ∘ and Mag with △"""
    return (
        _registry.get("nap"),
        _registry.get("prelie"),
        _registry.get("mag"),
        _registry.get("shmag"),
    )
