"""
Composite species as operads: (NAP∘q, □) and (Mag∘q, ◇).
"""

import logging
from typing import List

from ..core.errors import SelectorMismatchError, TreeSyntaxError
from ..core.labels import Bijection, FiniteSet, Label
from ..core.lincomb import LinComb
from ..core.text import NestedExpr, parse_nested
from ..operads.base import Operad
from ..trees.rooted import PlanarRootedTree, RootedTree
from .element import (
    CompositionElement,
    enumerate_composition_elements,
    relabel_composition,
    single_block,
)
from .operations import box_compose, diamond_compose

logger = logging.getLogger(__name__)

KINDS = {
    "box": ("NAP", RootedTree, box_compose),
    "diamond": ("Mag", PlanarRootedTree, diamond_compose),
}


class CompositionOperad(Operad[CompositionElement]):
    """
    The operad P∘q with the block-merging composition.

    Args:
        kind: "box" for (NAP∘q, □) or "diamond" for (Mag∘q, ◇)
        q: Any operad, itself possibly a composition operad
    """

    element_type = CompositionElement

    def __init__(self, kind: str, q: Operad):
        super().__init__()
        if kind not in KINDS:
            raise SelectorMismatchError(
                f"Unknown composition kind '{kind}'. Available kinds: {', '.join(KINDS)}"
            )
        outer, self.tree_type, self._compose = KINDS[kind]
        self.kind = kind
        self.q = q
        self.name = f"{kind}:{q.name}"
        self.description = f"{outer}∘{q.name} with the {'□' if kind == 'box' else '◇'} composition"
        self.planar = self.tree_type.planar
        logger.debug(f"Created composition operad {self.name}")

    def enumerate_basis(self, labels: FiniteSet) -> List[CompositionElement]:
        return enumerate_composition_elements(self.tree_type, self.q, labels)

    def compose(
        self, x: CompositionElement, s: Label, y: CompositionElement
    ) -> LinComb[CompositionElement]:
        self.check_element(x)
        self.check_element(y)
        return self._compose(x, s, y, self.q)

    def relabel(self, x: CompositionElement, sigma: Bijection) -> CompositionElement:
        return relabel_composition(self.check_element(x), sigma, self.q)

    def unit(self, label: Label) -> CompositionElement:
        return single_block(self.tree_type, self.q.unit(label), self.q)

    def ground(self, x: CompositionElement) -> FiniteSet:
        return x.ground

    def format(self, x: CompositionElement) -> str:
        return x.format(self.q)

    def parse(self, text: str) -> CompositionElement:
        """
        Parse `[Q-EXPR]` blocks arranged as a tree, e.g. `[1(2)]([a],[b])`.

        Each block's labels are those of its q-expression.

        Raises:
            TreeSyntaxError: On malformed input
            PartitionError: If two blocks share a label
        """
        values = []

        def build(node: NestedExpr):
            if not node.bracketed:
                raise TreeSyntaxError(
                    f"Expected a bracketed q-expression, found {node.head!r}", text, None
                )
            value = self.q.parse(node.head)
            block = self.q.ground(value)
            values.append((block, value))
            return self.tree_type(block, tuple(build(child) for child in node.children))

        tree = build(parse_nested(text))
        element = CompositionElement(tree, tuple(values))
        element.validate(self.q)
        return element

    def check_element(self, x):
        x = super().check_element(x)
        if type(x.tree) is not self.tree_type:
            raise SelectorMismatchError(
                f"Operad '{self.name}' needs {self.tree_type.__name__} block trees"
            )
        return x

    def validate(self, x: CompositionElement) -> CompositionElement:
        """
        Full membership check, including every q-value.

        Raises:
            PartitionError: If a q-value lives over the wrong block
        """
        return self.check_element(x).validate(self.q)
