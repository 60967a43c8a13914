"""
Tree families: non-planar rooted trees, planar rooted trees and planar binary trees.
"""

from .binary import (
    LEAF,
    Leaf,
    Node,
    PlanarBinaryTree,
    catalan,
    enumerate_binary_trees,
    enumerate_planar_shapes,
    graft_vee,
    knuth_phi,
    knuth_phi_inverse,
    leaf_count,
    shape,
)
from .enumerate import enumerate_planar_rooted_trees, enumerate_rooted_trees
from .rooted import PlanarRootedTree, RootedTree, TreeBase, parse_tree_expr, relabel_tree

__all__ = [
    "LEAF",
    "Leaf",
    "Node",
    "PlanarBinaryTree",
    "PlanarRootedTree",
    "RootedTree",
    "TreeBase",
    "catalan",
    "enumerate_binary_trees",
    "enumerate_planar_rooted_trees",
    "enumerate_planar_shapes",
    "enumerate_rooted_trees",
    "graft_vee",
    "knuth_phi",
    "knuth_phi_inverse",
    "leaf_count",
    "parse_tree_expr",
    "relabel_tree",
    "shape",
]
