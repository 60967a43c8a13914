"""
Labels, finite label sets and bijections.

Labels are short alphanumeric strings. They are totally ordered by
`label_key`: purely numeric labels come first, ordered by value, then every
other label in plain lexicographic order ("1" < "2" < "10" < "a" < "b").
"""

import re
from dataclasses import dataclass
from functools import total_ordering
from typing import Any, Dict, Iterable, Iterator, Mapping, Optional, Tuple

from .errors import BijectionError, DisjointnessError, DomainError

Label = str

LABEL_PATTERN = re.compile(r"^[A-Za-z0-9_]+$")


def label_key(label: Label) -> Tuple[int, int, str]:
    """
    Sort key realizing the fixed label order.

    Args:
        label: Label to order

    Returns:
        Tuple comparing numerals by value before any other label
    """
    if label.isdigit():
        return (0, int(label), label)
    return (1, 0, label)


def check_label(label: Any) -> Label:
    """
    Validate a label.

    Raises:
        DomainError: If label is not a non-empty alphanumeric string
    """
    if not isinstance(label, str) or not LABEL_PATTERN.match(label):
        raise DomainError(f"Invalid label {label!r}: labels are alphanumeric strings")
    return label


def vertex_key(vertex: Any) -> Tuple:
    """Sort key for tree vertices, which are either labels or label sets"""
    if isinstance(vertex, FiniteSet):
        return vertex.sort_key()
    return label_key(vertex)


@total_ordering
@dataclass(frozen=True)
class FiniteSet:
    """
    Finite set of distinct labels, stored in canonical label order.

    Accepts any iterable of labels; `FiniteSet.of("2", "1")` and
    `FiniteSet(("1", "2"))` are equal.
    """

    labels: Tuple[Label, ...] = ()

    def __post_init__(self):
        labels = tuple(check_label(label) for label in self.labels)
        if len(set(labels)) != len(labels):
            raise DomainError(f"Duplicate labels in finite set: {labels}")
        object.__setattr__(self, "labels", tuple(sorted(labels, key=label_key)))

    @classmethod
    def of(cls, *labels: Label) -> "FiniteSet":
        return cls(labels)

    def __iter__(self) -> Iterator[Label]:
        return iter(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    def __contains__(self, label: object) -> bool:
        return label in self.labels

    def __lt__(self, other: "FiniteSet") -> bool:
        if not isinstance(other, FiniteSet):
            return NotImplemented
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return "{" + ",".join(self.labels) + "}"

    def sort_key(self) -> Tuple:
        return tuple(label_key(label) for label in self.labels)

    def minimum(self) -> Label:
        if not self.labels:
            raise DomainError("Empty set has no minimal label")
        return self.labels[0]

    def without(self, label: Label) -> "FiniteSet":
        if label not in self:
            raise DomainError(f"Label {label!r} is not in {self}")
        return FiniteSet(tuple(x for x in self.labels if x != label))

    def union(self, other: "FiniteSet") -> "FiniteSet":
        """Disjoint union; overlapping sets are an error"""
        if not self.isdisjoint(other):
            common = sorted(set(self.labels) & set(other.labels), key=label_key)
            raise DisjointnessError(f"Sets {self} and {other} share labels {common}")
        return FiniteSet(self.labels + other.labels)

    def isdisjoint(self, other: "FiniteSet") -> bool:
        return set(self.labels).isdisjoint(other.labels)


@dataclass(frozen=True)
class Bijection:
    """
    Bijection between two finite label sets.

    Stored as (source, target) pairs sorted by source, so equal bijections
    compare and hash equal.
    """

    pairs: Tuple[Tuple[Label, Label], ...]

    def __post_init__(self):
        pairs = tuple((check_label(a), check_label(b)) for a, b in self.pairs)
        sources = [a for a, _ in pairs]
        targets = [b for _, b in pairs]
        if len(set(sources)) != len(sources):
            raise BijectionError(f"Label mapped twice: {sources}")
        if len(set(targets)) != len(targets):
            raise BijectionError(f"Mapping is not injective: {dict(pairs)}")
        object.__setattr__(
            self, "pairs", tuple(sorted(pairs, key=lambda p: label_key(p[0])))
        )

    @classmethod
    def from_mapping(
        cls,
        mapping: Mapping[Label, Label],
        domain: Optional[FiniteSet] = None,
        codomain: Optional[FiniteSet] = None,
    ) -> "Bijection":
        """
        Build a bijection, optionally checking it against declared sets.

        Raises:
            BijectionError: If the mapping is not total on domain or its
                image differs from codomain
        """
        bijection = cls(tuple(mapping.items()))
        if domain is not None and bijection.domain != domain:
            raise BijectionError(
                f"Mapping domain {bijection.domain} differs from declared {domain}"
            )
        if codomain is not None and bijection.codomain != codomain:
            raise BijectionError(
                f"Mapping image {bijection.codomain} differs from declared {codomain}"
            )
        return bijection

    @classmethod
    def identity(cls, labels: Iterable[Label]) -> "Bijection":
        return cls(tuple((label, label) for label in labels))

    @classmethod
    def between(cls, source: Iterable[Label], target: Iterable[Label]) -> "Bijection":
        """Bijection matching two equally sized sequences position by position"""
        source, target = tuple(source), tuple(target)
        if len(source) != len(target):
            raise BijectionError(
                f"Cannot match {len(source)} labels with {len(target)} labels"
            )
        return cls(tuple(zip(source, target)))

    @property
    def mapping(self) -> Dict[Label, Label]:
        return dict(self.pairs)

    @property
    def domain(self) -> FiniteSet:
        return FiniteSet(tuple(a for a, _ in self.pairs))

    @property
    def codomain(self) -> FiniteSet:
        return FiniteSet(tuple(b for _, b in self.pairs))

    def __call__(self, label: Label) -> Label:
        for source, target in self.pairs:
            if source == label:
                return target
        raise DomainError(f"Label {label!r} is not in the domain {self.domain}")

    def __len__(self) -> int:
        return len(self.pairs)

    def image(self, labels: Iterable[Label]) -> FiniteSet:
        mapping = self.mapping
        try:
            return FiniteSet(tuple(mapping[label] for label in labels))
        except KeyError as e:
            raise DomainError(f"Label {e.args[0]!r} is not in the domain {self.domain}") from e

    def inverse(self) -> "Bijection":
        return Bijection(tuple((b, a) for a, b in self.pairs))

    def compose(self, first: "Bijection") -> "Bijection":
        """Return self ∘ first (apply `first`, then self)"""
        if first.codomain != self.domain:
            raise BijectionError(
                f"Cannot compose: {first.codomain} is not the domain {self.domain}"
            )
        mapping = self.mapping
        return Bijection(tuple((a, mapping[b]) for a, b in first.pairs))

    def restrict(self, labels: Iterable[Label]) -> "Bijection":
        mapping = self.mapping
        try:
            return Bijection(tuple((label, mapping[label]) for label in labels))
        except KeyError as e:
            raise DomainError(f"Label {e.args[0]!r} is not in the domain {self.domain}") from e

    def union(self, other: "Bijection") -> "Bijection":
        """Union of bijections with disjoint domains and disjoint images"""
        if not self.domain.isdisjoint(other.domain):
            raise DisjointnessError(
                f"Bijection domains {self.domain} and {other.domain} overlap"
            )
        return Bijection(self.pairs + other.pairs)

    def __str__(self) -> str:
        return "{" + ", ".join(f"{a}->{b}" for a, b in self.pairs) + "}"
