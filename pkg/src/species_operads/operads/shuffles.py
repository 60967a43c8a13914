"""
Shuffles of ordered sequences.

A shuffle of A₁, …, A_k is an interleaving of the sequences that keeps the
internal order of each of them. There are (|A₁|+⋯+|A_k|)!/(|A₁|!⋯|A_k|!) of them.
"""

from dataclasses import dataclass
from math import factorial
from typing import Any, Hashable, List, Sequence, Tuple

from more_itertools import distinct_permutations

from ..core.errors import DisjointnessError


@dataclass(frozen=True)
class Shuffle:
    """An interleaving, each element tagged with the index of its source sequence"""

    merged: Tuple[Tuple[int, Any], ...]

    @property
    def sequence(self) -> Tuple[Any, ...]:
        return tuple(element for _, element in self.merged)

    def restriction(self, source: int) -> Tuple[Any, ...]:
        return tuple(element for index, element in self.merged if index == source)

    def __len__(self) -> int:
        return len(self.merged)


def shuffle_count(*sizes: int) -> int:
    """Multinomial number of shuffles of sequences with the given lengths"""
    result = factorial(sum(sizes))
    for size in sizes:
        result //= factorial(size)
    return result


def enumerate_multi_shuffles(*sequences: Sequence[Hashable]) -> List[Shuffle]:
    """
    All shuffles of several pairwise disjoint sequences, in a deterministic order.

    Raises:
        DisjointnessError: If an element appears in two sequences
    """
    seen: set = set()
    for sequence in sequences:
        if not seen.isdisjoint(sequence):
            raise DisjointnessError(f"Cannot shuffle overlapping sequences {sequences}")
        seen.update(sequence)
    tags = tuple(index for index, sequence in enumerate(sequences) for _ in sequence)
    if not tags:
        return [Shuffle(())]
    shuffles = []
    for order in distinct_permutations(tags):
        positions = [0] * len(sequences)
        merged = []
        for index in order:
            merged.append((index, sequences[index][positions[index]]))
            positions[index] += 1
        shuffles.append(Shuffle(tuple(merged)))
    return shuffles


def enumerate_shuffles(a: Sequence[Hashable], b: Sequence[Hashable]) -> List[Shuffle]:
    """
    All (A, B)-shuffles, C(|A|+|B|, |A|) of them.

    Raises:
        DisjointnessError: If A and B share an element
    """
    return enumerate_multi_shuffles(a, b)
