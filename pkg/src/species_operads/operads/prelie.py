"""
The Pre-Lie operad on non-planar labeled rooted trees.

u ∘_s v sums over all maps f from the branches of s to the vertices of v;
the term for f grafts each branch below its image.
"""

from collections import defaultdict
from itertools import product
from typing import Dict, List

from ..core.labels import vertex_key
from ..core.lincomb import LinComb
from ..trees.rooted import RootedTree, Vertex
from .base import TreeOperad, check_graft
from .registry import register_operad


def prelie_compose(u: RootedTree, s: Vertex, v: RootedTree) -> LinComb[RootedTree]:
    """
    Pre-Lie partial composition; equal terms collect into integer coefficients.

    The total multiplicity is |Ver(v)| ** (number of children of s).

    Raises:
        DomainError: If s is not a vertex of u
        DisjointnessError: If u without s and v share a vertex
    """
    check_graft(u, s, v)
    branches = u.find(s).children
    targets = sorted(v.vertices, key=vertex_key)
    terms = []
    for choice in product(targets, repeat=len(branches)):
        assignment: Dict[Vertex, List[RootedTree]] = defaultdict(list)
        for branch, target in zip(branches, choice):
            assignment[target].append(branch)
        terms.append(u.replace_subtree(s, v.attach(assignment)))
    return LinComb.sum_of(terms)


@register_operad
class PreLieOperad(TreeOperad[RootedTree]):
    name = "prelie"
    description = "Pre-Lie operad on rooted trees"
    tree_type = RootedTree

    def compose_trees(self, u: RootedTree, s: Vertex, v: RootedTree) -> LinComb[RootedTree]:
        return prelie_compose(u, s, v)
