"""
Composite species P∘q and the compositions □ (NAP∘q) and ◇ (Mag∘q).
"""

from .dimension import composition_dimension, dimension_table, synthetic_labels
from .element import (
    CompositionElement,
    enumerate_composition_elements,
    relabel_composition,
    single_block,
)
from .operad import CompositionOperad
from .operations import box_compose, diamond_compose

__all__ = [
    "CompositionElement",
    "CompositionOperad",
    "box_compose",
    "composition_dimension",
    "diamond_compose",
    "dimension_table",
    "enumerate_composition_elements",
    "relabel_composition",
    "single_block",
    "synthetic_labels",
]
