"""
Foundations: labels, finite sets, bijections, partitions and linear combinations.
"""

from .errors import (
    BijectionError,
    BoundsTooLargeError,
    DisjointnessError,
    DomainError,
    DuplicateLabelError,
    InvalidBaseOperadError,
    OperadError,
    OperadNotFoundError,
    PartitionError,
    SelectorMismatchError,
    SuiteNotFoundError,
    TreeError,
    TreeSyntaxError,
)
from .labels import Bijection, FiniteSet, Label, label_key, vertex_key
from .lincomb import Coefficient, LinComb, bilinear
from .partitions import Partition, glue_partitions, glue_sets, set_partitions
from .text import format_lincomb, parse_lincomb, parse_nested

__all__ = [
    "Bijection",
    "BijectionError",
    "BoundsTooLargeError",
    "Coefficient",
    "DisjointnessError",
    "DomainError",
    "DuplicateLabelError",
    "FiniteSet",
    "InvalidBaseOperadError",
    "Label",
    "LinComb",
    "OperadError",
    "OperadNotFoundError",
    "Partition",
    "PartitionError",
    "SelectorMismatchError",
    "SuiteNotFoundError",
    "TreeError",
    "TreeSyntaxError",
    "bilinear",
    "format_lincomb",
    "glue_partitions",
    "glue_sets",
    "label_key",
    "parse_lincomb",
    "parse_nested",
    "set_partitions",
    "vertex_key",
]
