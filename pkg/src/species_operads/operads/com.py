"""
The commutative operad: one basis element on every nonempty label set.
"""

import re
from dataclasses import dataclass
from typing import List

from ..core.errors import BijectionError, TreeSyntaxError
from ..core.labels import Bijection, FiniteSet, Label
from ..core.lincomb import LinComb
from ..core.partitions import glue_sets
from .base import Operad
from .registry import register_operad

_COM_PATTERN = re.compile(r"^\{\s*([A-Za-z0-9_]+(?:\s*,\s*[A-Za-z0-9_]+)*)\s*\}$")


@dataclass(frozen=True)
class ComElement:
    """The single basis element of com over a label set"""

    labels: FiniteSet

    def __str__(self) -> str:
        return str(self.labels)


@register_operad
class ComOperad(Operad[ComElement]):
    name = "com"
    description = "Commutative operad, one element per nonempty label set"
    element_type = ComElement

    def enumerate_basis(self, labels: FiniteSet) -> List[ComElement]:
        return [ComElement(labels)]

    def compose(self, x: ComElement, s: Label, y: ComElement) -> LinComb[ComElement]:
        self.check_element(x)
        self.check_element(y)
        return LinComb.of(ComElement(glue_sets(x.labels, s, y.labels)))

    def relabel(self, x: ComElement, sigma: Bijection) -> ComElement:
        if sigma.domain != x.labels:
            raise BijectionError(f"Cannot relabel {x} by a bijection on {sigma.domain}")
        return ComElement(sigma.image(x.labels))

    def unit(self, label: Label) -> ComElement:
        return ComElement(FiniteSet.of(label))

    def ground(self, x: ComElement) -> FiniteSet:
        return x.labels

    def format(self, x: ComElement) -> str:
        return str(x.labels)

    def parse(self, text: str) -> ComElement:
        match = _COM_PATTERN.match(text.strip())
        if not match:
            raise TreeSyntaxError(f"Expected a label set such as {{1,2}}, got {text!r}")
        return ComElement(FiniteSet(tuple(part.strip() for part in match.group(1).split(","))))
