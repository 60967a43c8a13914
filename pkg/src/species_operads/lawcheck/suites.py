"""
Named law-check suites loaded from suites.yaml.
"""

import logging
from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Optional

import yaml

from ..core.errors import SuiteNotFoundError
from ..operads.registry import resolve_operad
from .checker import (
    LawChecker,
    check_composition_operad,
    check_eq1,
    check_oracle,
    check_reduction,
)
from .types import Bounds, LawReport, Verdict

logger = logging.getLogger(__name__)

SUITES_PATH = Path(__file__).parent / "suites.yaml"

ALL_SUITES = "all"


@lru_cache(maxsize=1)
def load_suites(path: Path = SUITES_PATH) -> dict:
    """
    Load suite definitions.

    Raises:
        ValueError: If the file has no suites
    """
    with open(path, "r") as f:
        config = yaml.safe_load(f)
    if not config or not config.get("suites"):
        raise ValueError(f"No suites defined in {path}")
    return config


def suite_names() -> List[str]:
    return list(load_suites()["order"]) + [ALL_SUITES]


def _run_check(check: Dict, bounds: Bounds) -> List[LawReport]:
    kind = check["type"]
    if kind == "axioms":
        return LawChecker(resolve_operad(check["operad"]), bounds).check_all()
    if kind == "eq1":
        return [check_eq1(check["operad"], bounds, Verdict(check.get("expect", "holds")))]
    if kind == "composition":
        return check_composition_operad(check["kind"], check["q"], bounds)
    if kind == "reduction":
        return [check_reduction(check["kind"], bounds)]
    if kind == "oracle":
        return [check_oracle(check["operad"], bounds)]
    raise ValueError(f"Unknown check type '{kind}' in {SUITES_PATH.name}")


def run_suite(name: str, bounds: Optional[Bounds] = None) -> List[LawReport]:
    """
    Run a named suite, or every suite for "all".

    Raises:
        SuiteNotFoundError: If the suite name is unknown
    """
    config = load_suites()
    bounds = bounds or Bounds.from_env()
    names = config["order"] if name == ALL_SUITES else [name]
    reports: List[LawReport] = []
    for suite in names:
        if suite not in config["suites"]:
            raise SuiteNotFoundError(
                f"Suite '{suite}' not found. Available suites: {', '.join(suite_names())}"
            )
        logger.info(f"Running suite {suite}: {config['suites'][suite]['description']}")
        for check in config["suites"][suite]["checks"]:
            reports.extend(_run_check(check, bounds))
    unexpected = sum(report.unexpected for report in reports)
    logger.info(f"Suite {name}: {len(reports)} reports, {unexpected} unexpected")
    return reports
