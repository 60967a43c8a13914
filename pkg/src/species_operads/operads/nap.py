"""
The NAP operad on non-planar labeled rooted trees.

u ∘_s v replaces the vertex s of u by the tree v and connects every edge of u
arriving at s to the root of v.
"""

from typing import Tuple

from ..core.labels import Bijection, FiniteSet, Label
from ..core.lincomb import LinComb
from ..trees.rooted import RootedTree, Vertex
from .base import TreeOperad, root_graft
from .registry import register_operad


def nap_compose(u: RootedTree, s: Vertex, v: RootedTree) -> RootedTree:
    """
    Graft v at vertex s of u, moving the branches of s onto the root of v.

    Raises:
        DomainError: If s is not a vertex of u
        DisjointnessError: If u without s and v share a vertex
    """
    return root_graft(u, s, v)


def root_swap(labels: FiniteSet, old: Label, new: Label) -> Bijection:
    """Bijection from labels onto labels with `old` renamed to `new`, identity elsewhere"""
    return Bijection(tuple((label, new if label == old else label) for label in labels))


def nap_asso_suppl(
    t: RootedTree, s: Label, u: RootedTree, v: RootedTree
) -> Tuple[RootedTree, RootedTree]:
    """
    Both sides of the exchange identity
    (t ∘_s u) ∘_{root(u)} v = φ((t ∘_s v) ∘_{root(v)} u),
    where φ renames the root of u to the root of v.

    Returns:
        (left side, right side after relabeling)
    """
    lhs = nap_compose(nap_compose(t, s, u), u.root, v)
    inner = nap_compose(nap_compose(t, s, v), v.root, u)
    rhs = inner.relabel(root_swap(inner.label_set(), u.root, v.root))
    return lhs, rhs


@register_operad
class NAPOperad(TreeOperad[RootedTree]):
    name = "nap"
    description = "Non-associative permutative operad on rooted trees"
    tree_type = RootedTree

    def compose_trees(self, u: RootedTree, s: Vertex, v: RootedTree) -> LinComb[RootedTree]:
        return LinComb.of(nap_compose(u, s, v))
