"""
Exhaustive enumeration of rooted trees on a vertex set.

Trees are generated by choosing a root and a set partition of the remaining
vertices, one block per root subtree. The planar enumerator additionally
orders the blocks.
"""

import logging
from functools import lru_cache
from itertools import permutations, product
from typing import Iterable, List, Tuple, Type

from ..core.errors import DomainError
from ..core.labels import vertex_key
from ..core.partitions import set_partitions_of
from .rooted import PlanarRootedTree, RootedTree, TreeBase, Vertex

logger = logging.getLogger(__name__)


@lru_cache(maxsize=1024)
def _trees(cls: Type[TreeBase], vertices: Tuple[Vertex, ...]) -> Tuple[TreeBase, ...]:
    result = []
    for root in vertices:
        rest = tuple(v for v in vertices if v != root)
        for blocks in set_partitions_of(rest):
            orders = permutations(blocks) if cls.planar else (blocks,)
            for ordered in orders:
                for children in product(*(_trees(cls, block) for block in ordered)):
                    result.append(cls(root, children))
    return tuple(result)


def _enumerate(cls: Type[TreeBase], vertices: Iterable[Vertex]) -> List[TreeBase]:
    key = tuple(sorted(set(vertices), key=vertex_key))
    if not key:
        raise DomainError("Rooted trees need at least one vertex; the species is positive")
    trees = sorted(_trees(cls, key), key=lambda tree: tree.to_expr())
    logger.debug(f"Enumerated {len(trees)} {cls.__name__} values on {len(key)} vertices")
    return trees


def enumerate_rooted_trees(vertices: Iterable[Vertex]) -> List[RootedTree]:
    """
    All non-planar rooted trees on a vertex set, n^(n-1) of them.

    Args:
        vertices: Labels (a FiniteSet) or blocks

    Raises:
        DomainError: If the vertex set is empty
    """
    return _enumerate(RootedTree, vertices)  # type: ignore[return-value]


def enumerate_planar_rooted_trees(vertices: Iterable[Vertex]) -> List[PlanarRootedTree]:
    """
    All planar rooted trees on a vertex set, n!·Catalan(n-1) of them.

    Raises:
        DomainError: If the vertex set is empty
    """
    return _enumerate(PlanarRootedTree, vertices)  # type: ignore[return-value]
