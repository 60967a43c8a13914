"""
Base classes for operads.

This module defines the fundamental abstractions:
- Operad: a positive species with partial compositions, relabel action and units
- TreeOperad: an operad whose basis on a label set is a family of labeled trees

Every operad is given on basis elements; the linear extensions
(compose_lincomb, relabel_lincomb) are derived here.
"""

import logging
from abc import ABC, abstractmethod
from typing import Any, Dict, Generic, List, Mapping, Type, TypeVar

from ..core.errors import (
    DisjointnessError,
    DomainError,
    SelectorMismatchError,
    TreeError,
)
from ..core.labels import Bijection, FiniteSet, Label, label_key
from ..core.lincomb import LinComb, bilinear
from ..core.partitions import glue_sets
from ..core.text import format_lincomb, parse_lincomb
from ..trees.enumerate import enumerate_planar_rooted_trees, enumerate_rooted_trees
from ..trees.rooted import PlanarRootedTree, RootedTree, TreeBase, Vertex, parse_tree_expr

logger = logging.getLogger(__name__)

B = TypeVar("B")
T = TypeVar("T", bound=TreeBase)


class Operad(ABC, Generic[B]):
    """
    Abstract base class for all operads.

    Subclasses must define:
    - name: str - Selector used by the registry and the CLI
    - description: str - Human-readable description
    - element_type: the Python type of basis elements
    - enumerate_basis, compose, relabel, unit, ground, format, parse

    Example:
        ```python
        @register_operad
        class MyOperad(Operad[MyElement]):
            name = "mine"
            description = "Does something"
            element_type = MyElement

            def compose(self, x, s, y):
                return LinComb.of(...)
        ```
    """

    name: str
    description: str
    element_type: Type = object
    planar: bool = False
    has_roots: bool = False

    def __init__(self):
        self._basis_cache: Dict[FiniteSet, List[B]] = {}

    @abstractmethod
    def enumerate_basis(self, labels: FiniteSet) -> List[B]:
        """All basis elements over a nonempty label set"""

    @abstractmethod
    def compose(self, x: B, s: Label, y: B) -> LinComb[B]:
        """
        Partial composition x ∘_s y on basis elements.

        Args:
            x: Basis element over S
            s: Composition point, an element of S
            y: Basis element over T, with S ∖ {s} and T disjoint

        Returns:
            Linear combination over S ⊔_s T

        Raises:
            DomainError: If s is not a label of x
            DisjointnessError: If the label sets overlap
        """

    @abstractmethod
    def relabel(self, x: B, sigma: Bijection) -> B:
        """Species action of a bijection on a basis element"""

    @abstractmethod
    def unit(self, label: Label) -> B:
        """The unit u_s, a basis element over {s}"""

    @abstractmethod
    def ground(self, x: B) -> FiniteSet:
        """Label set a basis element lives over"""

    @abstractmethod
    def format(self, x: B) -> str:
        """Canonical text of a basis element"""

    @abstractmethod
    def parse(self, text: str) -> B:
        """Inverse of format"""

    def basis(self, labels: FiniteSet) -> List[B]:
        """
        Cached basis of the operad over a label set.

        The species is positive: the empty set has an empty basis.
        """
        if not len(labels):
            return []
        if labels not in self._basis_cache:
            self._basis_cache[labels] = self.enumerate_basis(labels)
            logger.debug(
                f"{self.name}: basis over {labels} has {len(self._basis_cache[labels])} elements"
            )
        return self._basis_cache[labels]

    def dimension(self, labels: FiniteSet) -> int:
        return len(self.basis(labels))

    def root(self, x: B) -> Label:
        raise TypeError(f"Operad '{self.name}' has no root labels")

    def check_element(self, x: Any) -> B:
        """
        Check that a value is a basis element of this operad.

        Raises:
            SelectorMismatchError: If the value has the wrong kind
        """
        if not isinstance(x, self.element_type):
            raise SelectorMismatchError(
                f"Operad '{self.name}' expects {self.element_type.__name__}, "
                f"got {type(x).__name__}"
            )
        return x

    def compose_lincomb(self, x: LinComb[B], s: Label, y: LinComb[B]) -> LinComb[B]:
        """Partial composition extended bilinearly"""
        return bilinear(lambda a, b: self.compose(a, s, b), x, y)

    def relabel_lincomb(self, x: LinComb[B], sigma: Bijection) -> LinComb[B]:
        """Species action extended linearly"""
        return x.map(lambda b: self.relabel(b, sigma))

    def compose_many(self, x: B, insertions: Mapping[Label, B]) -> LinComb[B]:
        """
        Compose at several labels of x, one partial composition at a time.

        Parallel associativity makes the result independent of the order.

        Raises:
            DomainError: If an insertion point is not a label of x
        """
        labels = self.ground(x)
        for s in insertions:
            if s not in labels:
                raise DomainError(f"Insertion point {s!r} is not a label of {self.format(x)}")
        result: LinComb[B] = LinComb.of(x)
        for s in sorted(insertions, key=label_key):
            y = insertions[s]
            result = result.flat_map(lambda b, s=s, y=y: self.compose(b, s, y))
        return result

    def format_lincomb(self, x: LinComb[B]) -> str:
        return format_lincomb(x, self.format)

    def parse_lincomb(self, text: str) -> LinComb[B]:
        return parse_lincomb(text, self.parse)

    def __repr__(self) -> str:
        return f"<{self.__class__.__name__} '{self.name}'>"


def check_graft(u: TreeBase, s: Vertex, v: TreeBase) -> None:
    """
    Preconditions of grafting v at vertex s of u.

    Raises:
        DomainError: If s is not a vertex of u
        DisjointnessError: If u (without s) and v share a vertex
        TreeError: If u and v are different tree kinds
    """
    if type(u) is not type(v):
        raise TreeError(f"Cannot graft {type(v).__name__} into {type(u).__name__}")
    if s not in u:
        raise DomainError(f"Vertex {s} is not in {u.to_expr()}")
    common = (u.vertices - {s}) & v.vertices
    if common:
        raise DisjointnessError(
            f"Cannot graft {v.to_expr()} into {u.to_expr()}: shared vertices "
            f"{sorted(map(str, common))}"
        )


def root_graft(u: T, s: Vertex, v: T) -> T:
    """Replace vertex s of u by v and hang the branches of s below the root of v"""
    check_graft(u, s, v)
    branches = u.find(s).children
    return u.replace_subtree(s, v.attach({v.root: branches}))


class TreeOperad(Operad[T]):
    """
    Operad whose basis elements are labeled rooted trees.

    Subclasses set tree_type and implement compose_trees, which works on trees
    with any hashable vertices so that block trees can reuse it.
    """

    tree_type: Type[TreeBase] = RootedTree
    has_roots = True

    @property  # type: ignore[override]
    def element_type(self) -> Type:
        return self.tree_type

    @property  # type: ignore[override]
    def planar(self) -> bool:
        return self.tree_type.planar

    @abstractmethod
    def compose_trees(self, u: T, s: Vertex, v: T) -> LinComb[T]:
        """Tree-level composition at vertex s; no label-set checks beyond grafting"""

    def enumerate_basis(self, labels: FiniteSet) -> List[T]:
        if self.tree_type is PlanarRootedTree:
            return enumerate_planar_rooted_trees(labels)  # type: ignore[return-value]
        return enumerate_rooted_trees(labels)  # type: ignore[return-value]

    def compose(self, x: T, s: Label, y: T) -> LinComb[T]:
        self.check_element(x)
        self.check_element(y)
        glue_sets(x.label_set(), s, y.label_set())
        return self.compose_trees(x, s, y)

    def relabel(self, x: T, sigma: Bijection) -> T:
        return self.check_element(x).relabel(sigma)

    def unit(self, label: Label) -> T:
        return self.tree_type.leaf(label)  # type: ignore[return-value]

    def ground(self, x: T) -> FiniteSet:
        return x.label_set()

    def root(self, x: T) -> Label:
        return x.root

    def format(self, x: T) -> str:
        return x.to_expr()

    def parse(self, text: str) -> T:
        return parse_tree_expr(text, planar=self.planar)
