"""
Basis elements of a composite species P∘q.

An element over I is a partition π of I, a rooted tree whose vertices are the
blocks of π, and one q-basis element over every block.
"""

import logging
from dataclasses import dataclass
from itertools import product
from typing import Any, Dict, Iterator, List, Tuple, Type

from ..core.errors import BijectionError, PartitionError
from ..core.labels import Bijection, FiniteSet, Label
from ..core.partitions import Partition, set_partitions
from ..operads.base import Operad
from ..trees.enumerate import enumerate_planar_rooted_trees, enumerate_rooted_trees
from ..trees.rooted import PlanarRootedTree, TreeBase

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CompositionElement:
    """
    A tree of blocks decorated by q-elements: t ⊗ ⊗_{C∈π} γ_C.

    Attributes:
        tree: Rooted tree (planar or not) whose vertices are the blocks
        values: (block, q-basis element) pairs, sorted by block
    """

    tree: TreeBase
    values: Tuple[Tuple[FiniteSet, Any], ...]

    def __post_init__(self):
        values = tuple(sorted(self.values, key=lambda pair: pair[0].sort_key()))
        blocks = [block for block, _ in values]
        if len(set(blocks)) != len(blocks):
            raise PartitionError(f"Block given two values: {[str(b) for b in blocks]}")
        if set(blocks) != set(self.tree.vertices):
            raise PartitionError(
                f"Tree vertices {sorted(map(str, self.tree.vertices))} and value blocks "
                f"{[str(b) for b in blocks]} differ"
            )
        Partition(tuple(blocks))
        object.__setattr__(self, "values", values)

    @property
    def partition(self) -> Partition:
        return Partition(tuple(block for block, _ in self.values))

    @property
    def ground(self) -> FiniteSet:
        return self.partition.ground

    @property
    def root_block(self) -> FiniteSet:
        return self.tree.root

    @property
    def planar(self) -> bool:
        return self.tree.planar

    def value(self, block: FiniteSet) -> Any:
        for candidate, value in self.values:
            if candidate == block:
                return value
        raise PartitionError(f"No q-value for block {block}")

    def block_of(self, label: Label) -> FiniteSet:
        return self.partition.block_of(label)

    def value_map(self) -> Dict[FiniteSet, Any]:
        return dict(self.values)

    def validate(self, q: Operad) -> "CompositionElement":
        """
        Check every value is a q-basis element over exactly its block.

        Raises:
            PartitionError: If a value lives over the wrong label set
            SelectorMismatchError: If a value is not a q-element
        """
        for block, value in self.values:
            q.check_element(value)
            if q.ground(value) != block:
                raise PartitionError(
                    f"Value {q.format(value)} lives over {q.ground(value)}, not block {block}"
                )
        return self

    def format(self, q: Operad) -> str:
        """Block expression such as `[1(2)]([a])`"""
        values = self.value_map()
        return self.tree.to_expr(lambda block: f"[{q.format(values[block])}]")

    def to_dict(self, q: Operad) -> dict:
        """
        Structured form: blocks in partition order, the tree over block
        indices and the q-expression of each block.
        """
        index = {block: str(i) for i, (block, _) in enumerate(self.values)}
        return {
            "blocks": [list(block.labels) for block, _ in self.values],
            "tree": self.tree.to_expr(index.__getitem__),
            "values": {index[block]: q.format(value) for block, value in self.values},
        }


def relabel_composition(x: CompositionElement, sigma: Bijection, q: Operad) -> CompositionElement:
    """
    Push a bijection through blocks, the block tree and every q-value.

    Raises:
        BijectionError: If the domain of sigma is not the ground set of x
    """
    if sigma.domain != x.ground:
        raise BijectionError(
            f"Cannot relabel an element over {x.ground} by a bijection on {sigma.domain}"
        )
    images = {block: sigma.image(block) for block, _ in x.values}
    return CompositionElement(
        x.tree.map_vertices(images.__getitem__),
        tuple(
            (images[block], q.relabel(value, sigma.restrict(block)))
            for block, value in x.values
        ),
    )


def single_block(tree_type: Type[TreeBase], value: Any, q: Operad) -> CompositionElement:
    """Element with one block carrying a single q-value"""
    block = q.ground(value)
    return CompositionElement(tree_type.leaf(block), ((block, value),))


def _block_trees(tree_type: Type[TreeBase], partition: Partition) -> List[TreeBase]:
    if tree_type is PlanarRootedTree:
        return enumerate_planar_rooted_trees(partition.blocks)  # type: ignore[return-value]
    return enumerate_rooted_trees(partition.blocks)  # type: ignore[return-value]


def iter_composition_elements(
    tree_type: Type[TreeBase], q: Operad, labels: FiniteSet
) -> Iterator[CompositionElement]:
    for partition in set_partitions(labels):
        value_choices = [q.basis(block) for block in partition]
        for tree in _block_trees(tree_type, partition):
            for chosen in product(*value_choices):
                yield CompositionElement(tree, tuple(zip(partition.blocks, chosen)))


def enumerate_composition_elements(
    tree_type: Type[TreeBase], q: Operad, labels: FiniteSet
) -> List[CompositionElement]:
    """
    Every basis element of P∘q over a label set, P being the tree species
    of the given kind.
    """
    if not len(labels):
        return []
    elements = list(iter_composition_elements(tree_type, q, labels))
    logger.debug(f"Enumerated {len(elements)} composition elements over {labels}")
    return elements
