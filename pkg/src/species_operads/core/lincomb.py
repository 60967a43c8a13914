"""
Formal finite linear combinations with rational coefficients.
"""

from fractions import Fraction
from numbers import Rational
from typing import (
    Callable,
    Dict,
    Generic,
    Hashable,
    Iterable,
    Iterator,
    Mapping,
    Tuple,
    TypeVar,
    Union,
)

B = TypeVar("B", bound=Hashable)
C = TypeVar("C", bound=Hashable)

Coefficient = Fraction
Scalar = Union[int, Fraction]


def as_coefficient(value: object) -> Coefficient:
    """
    Convert an exact scalar to a Fraction.

    Raises:
        TypeError: If value is a float or not a rational number
    """
    if isinstance(value, bool) or not isinstance(value, Rational):
        raise TypeError(f"Coefficients must be exact rationals, got {value!r}")
    return Fraction(value)


class LinComb(Generic[B]):
    """
    Immutable element of the free vector space on hashable basis elements.

    Zero coefficients are never stored, so two combinations are equal exactly
    when they have the same nonzero coefficients.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Mapping[B, Scalar], Iterable[Tuple[B, Scalar]]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        accumulated: Dict[B, Fraction] = {}
        for basis, coefficient in items:
            accumulated[basis] = accumulated.get(basis, Fraction(0)) + as_coefficient(
                coefficient
            )
        self._terms: Dict[B, Fraction] = {
            basis: coefficient for basis, coefficient in accumulated.items() if coefficient
        }

    @classmethod
    def zero(cls) -> "LinComb[B]":
        return cls()

    @classmethod
    def of(cls, basis: B, coefficient: Scalar = 1) -> "LinComb[B]":
        return cls(((basis, coefficient),))

    @classmethod
    def sum_of(cls, basis_elements: Iterable[B]) -> "LinComb[B]":
        """Sum of basis elements, each with coefficient 1 (repeats add up)"""
        return cls((basis, 1) for basis in basis_elements)

    def coefficient(self, basis: B) -> Coefficient:
        return self._terms.get(basis, Fraction(0))

    def items(self) -> Iterator[Tuple[B, Fraction]]:
        return iter(self._terms.items())

    @property
    def support(self) -> frozenset:
        return frozenset(self._terms)

    def __iter__(self) -> Iterator[B]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinComb):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "LinComb[B]") -> "LinComb[B]":
        if not isinstance(other, LinComb):
            return NotImplemented
        return LinComb(list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> "LinComb[B]":
        return LinComb((basis, -c) for basis, c in self._terms.items())

    def __sub__(self, other: "LinComb[B]") -> "LinComb[B]":
        if not isinstance(other, LinComb):
            return NotImplemented
        return self + (-other)

    def scale(self, scalar: Scalar) -> "LinComb[B]":
        factor = as_coefficient(scalar)
        return LinComb((basis, factor * c) for basis, c in self._terms.items())

    def __mul__(self, scalar: Scalar) -> "LinComb[B]":
        if isinstance(scalar, LinComb):
            return NotImplemented
        return self.scale(scalar)

    __rmul__ = __mul__

    def map(self, f: Callable[[B], C]) -> "LinComb[C]":
        """Apply a function to every basis element, merging collisions"""
        return LinComb((f(basis), c) for basis, c in self._terms.items())

    def flat_map(self, f: Callable[[B], "LinComb[C]"]) -> "LinComb[C]":
        """Extend a basis-to-combination function linearly"""
        terms = []
        for basis, c in self._terms.items():
            terms.extend((image, c * d) for image, d in f(basis).items())
        return LinComb(terms)

    def total_multiplicity(self) -> Fraction:
        """Sum of all coefficients"""
        return sum(self._terms.values(), Fraction(0))

    def __repr__(self) -> str:
        inner = ", ".join(f"{basis!r}: {c}" for basis, c in self._terms.items())
        return f"LinComb({{{inner}}})"


def bilinear(
    f: Callable[[B, C], "LinComb"], x: "LinComb[B]", y: "LinComb[C]"
) -> "LinComb":
    """
    Extend a map on pairs of basis elements bilinearly.

    Args:
        f: Function from two basis elements to a linear combination
        x: Left argument
        y: Right argument

    Returns:
        Σ x_a · y_b · f(a, b)
    """
    terms = []
    for a, c in x.items():
        for b, d in y.items():
            terms.extend((image, c * d * e) for image, e in f(a, b).items())
    return LinComb(terms)
