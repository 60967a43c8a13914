"""
Exhaustive law checking for operads and composition operads.
"""

from .checker import (
    LawChecker,
    check_axiom,
    check_composition_operad,
    check_eq1,
    check_oracle,
    check_reduction,
    embed_singletons,
)
from .oracle import brute_force_oracle_compose
from .suites import load_suites, run_suite, suite_names
from .types import OPERAD_AXIOMS, Bounds, Law, LawReport, Verdict, Witness

__all__ = [
    "OPERAD_AXIOMS",
    "Bounds",
    "Law",
    "LawChecker",
    "LawReport",
    "Verdict",
    "Witness",
    "brute_force_oracle_compose",
    "check_axiom",
    "check_composition_operad",
    "check_eq1",
    "check_oracle",
    "check_reduction",
    "embed_singletons",
    "load_suites",
    "run_suite",
    "suite_names",
]
