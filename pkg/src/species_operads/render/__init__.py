"""
Output formats for CLI results: DOT graphs and JSON documents.
"""

from .dot import element_to_dot, lincomb_to_dot, tree_to_dot
from .json_output import (
    CheckOutput,
    ComposeOutput,
    DimensionRow,
    DimsOutput,
    EnumerateOutput,
    LinCombOutput,
    OutputModel,
    TermOutput,
    check_output,
    lincomb_output,
    validate_report,
)

__all__ = [
    "CheckOutput",
    "ComposeOutput",
    "DimensionRow",
    "DimsOutput",
    "EnumerateOutput",
    "LinCombOutput",
    "OutputModel",
    "TermOutput",
    "check_output",
    "element_to_dot",
    "lincomb_output",
    "lincomb_to_dot",
    "tree_to_dot",
    "validate_report",
]
