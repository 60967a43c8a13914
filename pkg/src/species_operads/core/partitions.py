"""
Set partitions and the glued set S ⊔_s T.
"""

from dataclasses import dataclass
from typing import Iterable, Iterator, Tuple

from more_itertools import set_partitions as _set_partitions

from .errors import DisjointnessError, DomainError, PartitionError
from .labels import Bijection, FiniteSet, Label


@dataclass(frozen=True)
class Partition:
    """
    Partition of a finite label set into nonempty disjoint blocks.

    Blocks are kept sorted by their minimal label.
    """

    blocks: Tuple[FiniteSet, ...]

    def __post_init__(self):
        blocks = tuple(
            block if isinstance(block, FiniteSet) else FiniteSet(tuple(block))
            for block in self.blocks
        )
        seen: set = set()
        for block in blocks:
            if not len(block):
                raise PartitionError("Partition blocks must be nonempty")
            if not seen.isdisjoint(block):
                raise PartitionError(f"Block {block} overlaps another block")
            seen.update(block)
        object.__setattr__(self, "blocks", tuple(sorted(blocks)))

    @classmethod
    def of(cls, *blocks: Iterable[Label]) -> "Partition":
        return cls(tuple(FiniteSet(tuple(block)) for block in blocks))

    @property
    def ground(self) -> FiniteSet:
        return FiniteSet(tuple(label for block in self.blocks for label in block))

    def __iter__(self) -> Iterator[FiniteSet]:
        return iter(self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def __contains__(self, block: object) -> bool:
        return block in self.blocks

    def block_of(self, label: Label) -> FiniteSet:
        for block in self.blocks:
            if label in block:
                return block
        raise DomainError(f"Label {label!r} is not in the ground set {self.ground}")

    def relabel(self, sigma: Bijection) -> "Partition":
        return Partition(tuple(sigma.image(block) for block in self.blocks))

    def __str__(self) -> str:
        return "{" + ",".join(str(block) for block in self.blocks) + "}"


def glue_sets(S: FiniteSet, s: Label, T: FiniteSet) -> FiniteSet:
    """
    Compute S ⊔_s T = (S ∖ {s}) ∪ T.

    Args:
        S: Outer label set
        s: Label of S being replaced
        T: Label set replacing s (may reuse the label s itself)

    Returns:
        The glued set in canonical order

    Raises:
        DomainError: If s is not in S
        DisjointnessError: If S ∖ {s} and T overlap
    """
    rest = S.without(s)
    if not rest.isdisjoint(T):
        common = [label for label in T if label in rest]
        raise DisjointnessError(
            f"Cannot glue {T} into {S} at {s!r}: labels {common} already used"
        )
    return rest.union(T)


def glue_partitions(
    pi: Partition, s: Label, rho: Partition, designated: FiniteSet
) -> Partition:
    """
    Glue two partitions at s, merging the block of s with a designated block.

    The result partitions S ⊔_s T and has blocks π ∖ {C_s}, ρ ∖ {B★} and the
    merged block C_s ⊔_s B★.

    Args:
        pi: Partition of S
        s: Label of S being replaced
        rho: Partition of T
        designated: The block B★ of ρ merged with the block of s

    Raises:
        PartitionError: If the designated block is not a block of ρ
    """
    if designated not in rho:
        raise PartitionError(f"Designated block {designated} is not a block of {rho}")
    glue_sets(pi.ground, s, rho.ground)
    c_s = pi.block_of(s)
    merged = c_s.without(s).union(designated)
    blocks = [block for block in pi if block != c_s]
    blocks.extend(block for block in rho if block != designated)
    blocks.append(merged)
    return Partition(tuple(blocks))


def set_partitions(ground: FiniteSet) -> Iterator[Partition]:
    """
    Enumerate every partition of a label set.

    The empty set has exactly one partition, with no blocks.
    """
    if not len(ground):
        yield Partition(())
        return
    for blocks in _set_partitions(ground.labels):
        yield Partition(tuple(FiniteSet(tuple(block)) for block in blocks))


def set_partitions_of(items: Tuple) -> Iterator[Tuple[Tuple, ...]]:
    """
    Enumerate partitions of an arbitrary sequence of distinct items.

    Used for block-labeled trees whose vertices are label sets.
    """
    if not items:
        yield ()
        return
    for blocks in _set_partitions(items):
        yield tuple(tuple(block) for block in blocks)
