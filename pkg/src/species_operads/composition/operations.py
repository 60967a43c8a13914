"""
The partial compositions □ on NAP∘q and ◇ on Mag∘q.

For x over S, s ∈ S and y over T, let C_s be the block of x containing s and
B★ the block at the root of y. The block trees are composed at the vertex C_s
(by NAP grafting for □, by shuffles for ◇), the vertex B★ is renamed to the
merged block C_s ⊔_s B★, and the merged block carries γ_{C_s} ∘_s β_{B★}
computed in q. All other blocks keep their values.
"""

import logging
from typing import Callable

from ..core.errors import PartitionError, SelectorMismatchError
from ..core.labels import FiniteSet, Label
from ..core.lincomb import LinComb
from ..core.partitions import glue_partitions, glue_sets
from ..operads.base import Operad
from ..operads.nap import nap_compose
from ..operads.shuffle_mag import shuffle_mag_compose
from ..trees.rooted import PlanarRootedTree, RootedTree, TreeBase
from .element import CompositionElement

logger = logging.getLogger(__name__)

TreeGraft = Callable[[TreeBase, FiniteSet, TreeBase], LinComb]


def _compose_blocks(
    x: CompositionElement,
    s: Label,
    y: CompositionElement,
    q: Operad,
    graft: TreeGraft,
) -> LinComb[CompositionElement]:
    glue_sets(x.ground, s, y.ground)
    c_s = x.block_of(s)
    b_star = y.root_block
    merged = c_s.without(s).union(b_star)

    expected = glue_partitions(x.partition, s, y.partition, b_star)
    merged_values = q.compose(x.value(c_s), s, y.value(b_star))
    if not merged_values:
        return LinComb()

    kept = [(block, value) for block, value in x.values if block != c_s]
    kept += [(block, value) for block, value in y.values if block != b_star]

    def rename(vertex: FiniteSet) -> FiniteSet:
        return merged if vertex == b_star else vertex

    terms = []
    for tree, tree_coefficient in graft(x.tree, c_s, y.tree).items():
        block_tree = tree.map_vertices(rename)
        for value, value_coefficient in merged_values.items():
            element = CompositionElement(block_tree, tuple(kept) + ((merged, value),))
            terms.append((element, tree_coefficient * value_coefficient))
    result = LinComb(terms)

    for element in result:
        if element.partition != expected:
            raise PartitionError(
                f"Composite partition {element.partition} differs from {expected}"
            )
    logger.debug(f"Composed at {s} in block {c_s} with root block {b_star}: {len(result)} terms")
    return result


def _nap_graft(u: TreeBase, s: FiniteSet, v: TreeBase) -> LinComb:
    return LinComb.of(nap_compose(u, s, v))  # type: ignore[arg-type]


def _require(x: CompositionElement, tree_type: type, operation: str) -> None:
    if type(x.tree) is not tree_type:
        raise SelectorMismatchError(
            f"{operation} needs {tree_type.__name__} block trees, got {type(x.tree).__name__}"
        )


def box_compose(
    x: CompositionElement, s: Label, y: CompositionElement, q: Operad
) -> LinComb[CompositionElement]:
    """
    □_s on NAP∘q.

    Args:
        x: Element over S with a non-planar block tree
        s: Composition point in S
        y: Element over T with a non-planar block tree
        q: The operad decorating the blocks

    Returns:
        Linear combination over S ⊔_s T; zero when the q-composition is zero

    Raises:
        DomainError: If s is not in S
        DisjointnessError: If S ∖ {s} and T overlap
        SelectorMismatchError: If a block tree is planar
    """
    _require(x, RootedTree, "□")
    _require(y, RootedTree, "□")
    return _compose_blocks(x, s, y, q, _nap_graft)


def diamond_compose(
    x: CompositionElement, s: Label, y: CompositionElement, q: Operad
) -> LinComb[CompositionElement]:
    """
    ◇_s on Mag∘q: one block tree per shuffle of the branches of C_s in x with
    the branches at the root of y.

    Raises:
        DomainError: If s is not in S
        DisjointnessError: If S ∖ {s} and T overlap
        SelectorMismatchError: If a block tree is not planar
    """
    _require(x, PlanarRootedTree, "◇")
    _require(y, PlanarRootedTree, "◇")
    return _compose_blocks(x, s, y, q, shuffle_mag_compose)  # type: ignore[arg-type]
