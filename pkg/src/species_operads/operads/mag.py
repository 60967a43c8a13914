"""
The magmatic operad Mag on planar labeled rooted trees.

u ∘_s v puts v in the place of s; the root of v keeps its own children on the
left and receives the branches of s, in order, on the right.
"""

from ..core.lincomb import LinComb
from ..trees.rooted import PlanarRootedTree, Vertex
from .base import TreeOperad, root_graft
from .registry import register_operad


def mag_compose(u: PlanarRootedTree, s: Vertex, v: PlanarRootedTree) -> PlanarRootedTree:
    """
    Graft v at vertex s of u, preserving the position of s among its siblings.

    Raises:
        DomainError: If s is not a vertex of u
        DisjointnessError: If u without s and v share a vertex
    """
    return root_graft(u, s, v)


@register_operad
class MagOperad(TreeOperad[PlanarRootedTree]):
    name = "mag"
    description = "Magmatic operad on planar rooted trees"
    tree_type = PlanarRootedTree

    def compose_trees(
        self, u: PlanarRootedTree, s: Vertex, v: PlanarRootedTree
    ) -> LinComb[PlanarRootedTree]:
        return LinComb.of(mag_compose(u, s, v))
