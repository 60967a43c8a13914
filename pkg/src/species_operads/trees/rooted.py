"""
Labeled rooted trees, non-planar and planar.

A tree is a recursive frozen value: a vertex and a tuple of subtrees. Vertices
are labels for the tree operads and label sets (blocks) for trees inside
composition elements. Both families share one base class; a RootedTree keeps
its children sorted by the minimal vertex of each subtree, which makes equal
non-planar trees compare equal, while a PlanarRootedTree keeps children in the
order given.
"""

import logging
from dataclasses import dataclass, field
from typing import (
    Any,
    Callable,
    Dict,
    Hashable,
    Iterator,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
    Type,
    TypeVar,
)

from ..core.errors import (
    BijectionError,
    DomainError,
    DuplicateLabelError,
    TreeError,
    TreeSyntaxError,
)
from ..core.labels import Bijection, FiniteSet, check_label, vertex_key
from ..core.text import NestedExpr, parse_nested

logger = logging.getLogger(__name__)

Vertex = Hashable

T = TypeVar("T", bound="TreeBase")


@dataclass(frozen=True)
class TreeBase:
    """Shared behaviour of planar and non-planar rooted trees"""

    label: Vertex
    children: Tuple["TreeBase", ...] = ()
    _vertices: frozenset = field(default=frozenset(), init=False, repr=False, compare=False)
    _min_key: Tuple = field(default=(), init=False, repr=False, compare=False)
    _hash: int = field(default=0, init=False, repr=False, compare=False)

    planar = True

    def __post_init__(self):
        if isinstance(self.label, FiniteSet):
            if not len(self.label):
                raise TreeError("Tree vertices cannot be empty label sets")
        else:
            check_label(self.label)
        children = tuple(self.children)
        vertices = {self.label}
        size = 1
        for child in children:
            if type(child) is not type(self):
                raise TreeError(
                    f"Cannot mix {type(child).__name__} into {type(self).__name__}"
                )
            if isinstance(child.label, FiniteSet) != isinstance(self.label, FiniteSet):
                raise TreeError("Cannot mix label vertices and block vertices")
            vertices |= child._vertices
            size += len(child._vertices)
        if len(vertices) != size:
            raise DuplicateLabelError(f"Repeated vertex in tree rooted at {self.label}")
        children = self._order_children(children)
        min_key = min([vertex_key(self.label)] + [child._min_key for child in children])
        object.__setattr__(self, "children", children)
        object.__setattr__(self, "_vertices", frozenset(vertices))
        object.__setattr__(self, "_min_key", min_key)
        object.__setattr__(self, "_hash", hash((type(self).__name__, self.label, children)))

    def _order_children(self, children: Tuple["TreeBase", ...]) -> Tuple["TreeBase", ...]:
        return children

    def __hash__(self) -> int:
        return self._hash

    @classmethod
    def leaf(cls: Type[T], label: Vertex) -> T:
        return cls(label, ())

    @property
    def root(self) -> Vertex:
        return self.label

    @property
    def vertices(self) -> frozenset:
        return self._vertices

    def label_set(self) -> FiniteSet:
        """Vertex set of a label-vertex tree"""
        if isinstance(self.label, FiniteSet):
            raise TreeError("Block trees have no label set; use vertices")
        return FiniteSet(tuple(self._vertices))

    def __len__(self) -> int:
        return len(self._vertices)

    def __contains__(self, vertex: object) -> bool:
        return vertex in self._vertices

    @property
    def root_children(self) -> Tuple[Vertex, ...]:
        return tuple(child.label for child in self.children)

    def preorder(self) -> Iterator[Vertex]:
        yield self.label
        for child in self.children:
            yield from child.preorder()

    def subtrees(self) -> Iterator["TreeBase"]:
        yield self
        for child in self.children:
            yield from child.subtrees()

    def find(self: T, vertex: Vertex) -> T:
        """
        Return the subtree rooted at a vertex.

        Raises:
            DomainError: If the vertex is not in the tree
        """
        for subtree in self.subtrees():
            if subtree.label == vertex:
                return subtree  # type: ignore[return-value]
        raise DomainError(f"Vertex {vertex} is not in tree {self.to_expr()}")

    def children_of(self, vertex: Vertex) -> Tuple[Vertex, ...]:
        return self.find(vertex).root_children

    def parent_map(self) -> Dict[Vertex, Vertex]:
        parents: Dict[Vertex, Vertex] = {}
        for subtree in self.subtrees():
            for child in subtree.children:
                parents[child.label] = subtree.label
        return parents

    def edges(self) -> List[Tuple[Vertex, Vertex, int]]:
        """(child, parent, position among siblings) for every edge, in preorder"""
        return [
            (child.label, subtree.label, position)
            for subtree in self.subtrees()
            for position, child in enumerate(subtree.children)
        ]

    def map_vertices(self: T, f: Callable[[Vertex], Vertex]) -> T:
        """Apply a function to every vertex, keeping the shape"""
        return type(self)(f(self.label), tuple(child.map_vertices(f) for child in self.children))

    def relabel(self: T, sigma: Bijection) -> T:
        """
        Push a bijection through the vertex labels.

        Args:
            sigma: Bijection whose domain is the vertex set

        Raises:
            BijectionError: If the domain of sigma is not the vertex set
        """
        if sigma.domain != self.label_set():
            raise BijectionError(
                f"Cannot relabel tree on {self.label_set()} by a bijection on {sigma.domain}"
            )
        mapping = sigma.mapping
        return self.map_vertices(mapping.__getitem__)

    def with_children(self: T, children: Sequence[T]) -> T:
        return type(self)(self.label, tuple(children))

    def replace_subtree(self: T, vertex: Vertex, replacement: T) -> T:
        """
        Replace the subtree rooted at a vertex by another tree.

        Raises:
            DomainError: If the vertex is not in the tree
        """
        if vertex not in self:
            raise DomainError(f"Vertex {vertex} is not in tree {self.to_expr()}")
        return self._replace(vertex, replacement)

    def _replace(self: T, vertex: Vertex, replacement: T) -> T:
        if self.label == vertex:
            return replacement
        return type(self)(
            self.label,
            tuple(
                child._replace(vertex, replacement) if vertex in child else child
                for child in self.children
            ),
        )

    def attach(self: T, branches: Mapping[Vertex, Sequence[T]]) -> T:
        """
        Append extra branches below given vertices, after the existing children.

        Args:
            branches: Vertex to the ordered list of subtrees grafted below it
        """
        extra = tuple(branches.get(self.label, ()))
        return type(self)(
            self.label,
            tuple(child.attach(branches) for child in self.children) + extra,
        )

    def to_expr(self, format_vertex: Optional[Callable[[Vertex], str]] = None) -> str:
        """Text form `root(child1,child2,...)`"""
        fmt = format_vertex or str
        head = fmt(self.label)
        if not self.children:
            return head
        return head + "(" + ",".join(child.to_expr(format_vertex) for child in self.children) + ")"

    def __str__(self) -> str:
        return self.to_expr()

    @classmethod
    def from_children_map(
        cls: Type[T], root: Vertex, children: Mapping[Vertex, Sequence[Vertex]]
    ) -> T:
        """
        Build a tree from a root and an ordered children list per vertex.

        Raises:
            TreeError: If the map contains a cycle
        """
        seen = set()

        def build(vertex: Vertex) -> T:
            if vertex in seen:
                raise TreeError(f"Vertex {vertex} is reached twice")
            seen.add(vertex)
            return cls(vertex, tuple(build(child) for child in children.get(vertex, ())))

        tree = build(root)
        unreached = set(children) - seen
        if unreached:
            raise TreeError(f"Vertices {sorted(map(str, unreached))} are not connected to the root")
        return tree

    @classmethod
    def from_parent_map(
        cls: Type[T], vertices: Sequence[Vertex], parent: Mapping[Vertex, Vertex]
    ) -> T:
        """
        Build a tree from its parent map; children follow the order of `vertices`.

        Raises:
            TreeError: If there is not exactly one root or the map has a cycle
        """
        roots = [v for v in vertices if v not in parent]
        if len(roots) != 1:
            raise TreeError(f"A rooted tree has exactly one root, found {len(roots)}")
        children: Dict[Vertex, List[Vertex]] = {v: [] for v in vertices}
        for v in vertices:
            if v in parent:
                if parent[v] not in children:
                    raise TreeError(f"Parent {parent[v]} of {v} is not a vertex")
                children[parent[v]].append(v)
        return cls.from_children_map(roots[0], children)


@dataclass(frozen=True, eq=True)
class RootedTree(TreeBase):
    """Non-planar rooted tree in canonical form (basis of NAP and Pre-Lie)"""

    planar = False

    def _order_children(self, children):
        return tuple(sorted(children, key=lambda child: child._min_key))

    def __hash__(self) -> int:
        return self._hash


@dataclass(frozen=True, eq=True)
class PlanarRootedTree(TreeBase):
    """Planar rooted tree; children are ordered left to right (basis of Mag)"""

    planar = True

    def __hash__(self) -> int:
        return self._hash


def _build(node: NestedExpr, cls: Type[T], text: str) -> T:
    if node.bracketed:
        raise TreeSyntaxError(f"Unexpected bracketed vertex [{node.head}]", text, None)
    return cls(node.head, tuple(_build(child, cls, text) for child in node.children))


def parse_tree_expr(text: str, planar: bool = False) -> Any:
    """
    Parse `LABEL | LABEL '(' EXPR (',' EXPR)* ')'` into a tree.

    Args:
        text: Tree expression, e.g. `1(a(3,4,b(c)))`
        planar: Keep child order (PlanarRootedTree) or canonicalize (RootedTree)

    Returns:
        RootedTree or PlanarRootedTree

    Raises:
        TreeSyntaxError: On malformed input
        DuplicateLabelError: If a label occurs twice
    """
    cls: Type[TreeBase] = PlanarRootedTree if planar else RootedTree
    tree = _build(parse_nested(text), cls, text)
    logger.debug(f"Parsed {text!r} as {type(tree).__name__} {tree}")
    return tree


def relabel_tree(tree: T, sigma: Bijection) -> T:
    """
    Species action on trees: rename every vertex, keep the shape.

    Raises:
        BijectionError: If the domain of sigma is not the vertex set
    """
    return tree.relabel(sigma)
