"""
Planar binary trees, the magma product ∨ and Knuth's rotation correspondence.

Φ sends a binary tree with n leaves to a planar rooted tree with n vertices:
Φ(|) is a single vertex and Φ(t1 ∨ t2) is Φ(t2) with Φ(t1) grafted as the new
leftmost child of its root.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import count
from math import comb
from typing import List, Tuple, Union

from ..core.errors import DomainError
from .rooted import PlanarRootedTree, TreeBase

Shape = Tuple["Shape", ...]


@dataclass(frozen=True)
class Leaf:
    def __str__(self) -> str:
        return "|"


@dataclass(frozen=True)
class Node:
    left: "PlanarBinaryTree"
    right: "PlanarBinaryTree"

    def __str__(self) -> str:
        return f"({self.left}∨{self.right})"


PlanarBinaryTree = Union[Leaf, Node]

LEAF = Leaf()


def graft_vee(t1: PlanarBinaryTree, t2: PlanarBinaryTree) -> Node:
    """The free magma product: the Y-tree with t1 on the left and t2 on the right"""
    return Node(t1, t2)


def leaf_count(t: PlanarBinaryTree) -> int:
    if isinstance(t, Leaf):
        return 1
    return leaf_count(t.left) + leaf_count(t.right)


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


@lru_cache(maxsize=None)
def _binary_trees(n: int) -> Tuple[PlanarBinaryTree, ...]:
    if n == 1:
        return (LEAF,)
    return tuple(
        Node(left, right)
        for k in range(1, n)
        for left in _binary_trees(k)
        for right in _binary_trees(n - k)
    )


def enumerate_binary_trees(leaves: int) -> List[PlanarBinaryTree]:
    """
    All planar binary trees with a given number of leaves (Catalan(leaves-1) of them).

    Raises:
        DomainError: If leaves < 1
    """
    if leaves < 1:
        raise DomainError(f"A binary tree has at least one leaf, got {leaves}")
    return list(_binary_trees(leaves))


def shape(tree: TreeBase) -> Shape:
    """Unlabeled shape of a planar tree as nested tuples of children"""
    return tuple(shape(child) for child in tree.children)


def _phi_shape(t: PlanarBinaryTree) -> Shape:
    if isinstance(t, Leaf):
        return ()
    return (_phi_shape(t.left),) + _phi_shape(t.right)


def label_shape(tree_shape: Shape) -> PlanarRootedTree:
    """Label a shape with "1", "2", ... in postorder"""
    counter = count(1)

    def build(node: Shape) -> PlanarRootedTree:
        children = tuple(build(child) for child in node)
        return PlanarRootedTree(str(next(counter)), children)

    return build(tree_shape)


def knuth_phi(t: PlanarBinaryTree) -> PlanarRootedTree:
    """
    Knuth's rotation correspondence.

    Args:
        t: Planar binary tree with n leaves

    Returns:
        Planar rooted tree with n vertices labeled "1".."n" in postorder
    """
    return label_shape(_phi_shape(t))


def _phi_inverse(node: Shape) -> PlanarBinaryTree:
    if not node:
        return LEAF
    return Node(_phi_inverse(node[0]), _phi_inverse(node[1:]))


def knuth_phi_inverse(tree: TreeBase) -> PlanarBinaryTree:
    """Inverse of Φ; labels are ignored"""
    return _phi_inverse(shape(tree))


@lru_cache(maxsize=None)
def _forests(vertices: int) -> Tuple[Shape, ...]:
    if vertices == 0:
        return ((),)
    return tuple(
        (first,) + rest
        for k in range(1, vertices + 1)
        for first in _shapes(k)
        for rest in _forests(vertices - k)
    )


@lru_cache(maxsize=None)
def _shapes(vertices: int) -> Tuple[Shape, ...]:
    return _forests(vertices - 1)


def enumerate_planar_shapes(vertices: int) -> List[PlanarRootedTree]:
    """
    All planar rooted tree shapes with a given number of vertices, postorder labeled.

    Raises:
        DomainError: If vertices < 1
    """
    if vertices < 1:
        raise DomainError(f"A rooted tree has at least one vertex, got {vertices}")
    return [label_shape(s) for s in _shapes(vertices)]

