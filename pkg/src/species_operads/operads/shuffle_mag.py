"""
Mag with the shuffle composition △.

t △_s u sums, over all shuffles H of the branches of s in t with the branches
at the root of u, the tree where u replaces s and the root of u carries the
branches in the order given by H.
"""

from ..core.lincomb import LinComb
from ..trees.rooted import PlanarRootedTree, Vertex
from .base import TreeOperad, check_graft
from .registry import register_operad
from .shuffles import enumerate_shuffles


def shuffle_mag_compose(
    t: PlanarRootedTree, s: Vertex, u: PlanarRootedTree
) -> LinComb[PlanarRootedTree]:
    """
    Shuffle composition; every shuffle gives a distinct term with coefficient 1.

    Raises:
        DomainError: If s is not a vertex of t
        DisjointnessError: If t without s and u share a vertex
    """
    check_graft(t, s, u)
    branches = t.find(s).children
    return LinComb.sum_of(
        t.replace_subtree(s, u.with_children(shuffle.sequence))
        for shuffle in enumerate_shuffles(branches, u.children)
    )


@register_operad
class ShuffleMagOperad(TreeOperad[PlanarRootedTree]):
    name = "shmag"
    description = "Mag on planar rooted trees with the shuffle composition"
    tree_type = PlanarRootedTree

    def compose_trees(
        self, u: PlanarRootedTree, s: Vertex, v: PlanarRootedTree
    ) -> LinComb[PlanarRootedTree]:
        return shuffle_mag_compose(u, s, v)
