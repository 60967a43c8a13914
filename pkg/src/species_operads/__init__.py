"""
species-operads - operads on labeled rooted trees and the composite
operads (NAP∘q, □) and (Mag∘q, ◇), with an exhaustive law checker.
"""

from .composition import CompositionElement, CompositionOperad, box_compose, diamond_compose
from .core import Bijection, FiniteSet, LinComb, OperadError, Partition
from .operads import Operad, get_registry, operad_instances, resolve_operad
from .trees import PlanarRootedTree, RootedTree, parse_tree_expr

__version__ = "0.1.0"

__all__ = [
    "Bijection",
    "CompositionElement",
    "CompositionOperad",
    "FiniteSet",
    "LinComb",
    "Operad",
    "OperadError",
    "Partition",
    "PlanarRootedTree",
    "RootedTree",
    "box_compose",
    "diamond_compose",
    "get_registry",
    "operad_instances",
    "parse_tree_expr",
    "resolve_operad",
]
