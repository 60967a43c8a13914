"""
Dimensions of composite species.
"""

from math import prod
from typing import List, Tuple

from ..core.errors import DomainError
from ..core.labels import FiniteSet
from ..core.partitions import set_partitions
from ..operads.base import Operad


def synthetic_labels(n: int) -> FiniteSet:
    """The label set {"1", ..., "n"}"""
    return FiniteSet(tuple(str(i) for i in range(1, n + 1)))


def composition_dimension(p: Operad, q: Operad, labels: FiniteSet) -> int:
    """
    dim (P∘q)[I] = Σ over partitions X of I of dim P[X] · Π_{B∈X} dim q[B].

    P is evaluated on a set with one synthetic label per block, which is
    enough because dimensions are invariant under relabeling.

    Raises:
        DomainError: If the label set is empty
    """
    if not len(labels):
        raise DomainError("Composite dimension needs a nonempty label set")
    total = 0
    for partition in set_partitions(labels):
        outer = p.dimension(synthetic_labels(len(partition)))
        if outer:
            total += outer * prod(q.dimension(block) for block in partition)
    return total


def dimension_table(p: Operad, q: Operad, max_n: int) -> List[Tuple[int, int]]:
    """(n, dim (P∘q)[{1..n}]) for n = 1..max_n"""
    return [(n, composition_dimension(p, q, synthetic_labels(n))) for n in range(1, max_n + 1)]
