"""
Structured JSON output for the CLI.

Field names are camelCase on the wire, as for every model derived from
OutputModel. Law report records keep the snake_case form fixed by
law-report.schema.json and are validated against it before output.
"""

import json
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, List, Optional

import jsonschema
from pydantic import BaseModel, ConfigDict, Field
from pydantic.alias_generators import to_camel

from ..composition.element import CompositionElement
from ..core.lincomb import LinComb
from ..core.text import format_coefficient
from ..lawcheck.types import LawReport
from ..operads.base import Operad

REPORT_SCHEMA_PATH = Path(__file__).parent.parent / "lawcheck" / "law-report.schema.json"


class OutputModel(BaseModel):
    """
    Base model for CLI output.

    Example:
        ```python
        class DimsOutput(OutputModel):
            max_n: int  # serialized as "maxN"
        ```
    """

    model_config = ConfigDict(
        alias_generator=to_camel,
        populate_by_name=True,
    )

    def to_json(self) -> str:
        return json.dumps(self.model_dump(by_alias=True), indent=2, ensure_ascii=False)


class TermOutput(OutputModel):
    """One basis element with its coefficient, both in canonical text form"""

    coefficient: str
    element: str
    blocks: Optional[Dict[str, Any]] = Field(
        default=None, description="Block structure for composition elements"
    )


class LinCombOutput(OutputModel):
    operad: str
    text: str = Field(description="Canonical text of the whole combination")
    terms: List[TermOutput]
    term_count: int
    total_multiplicity: str


class ComposeOutput(LinCombOutput):
    outer: str
    at: str
    inner: str


class EnumerateOutput(OutputModel):
    operad: str
    labels: List[str]
    count: int
    elements: List[str]


class DimensionRow(OutputModel):
    n: int
    dimension: int


class DimsOutput(OutputModel):
    p: str
    q: str
    rows: List[DimensionRow]


class CheckOutput(OutputModel):
    suite: str
    report_count: int
    unexpected_count: int
    reports: List[Dict[str, Any]]


def _term(operad: Operad, element: Any, coefficient) -> TermOutput:
    blocks = None
    if isinstance(element, CompositionElement):
        blocks = element.to_dict(getattr(operad, "q"))
    return TermOutput(
        coefficient=format_coefficient(coefficient),
        element=operad.format(element),
        blocks=blocks,
    )


def lincomb_output(operad: Operad, x: LinComb, **extra) -> Dict[str, Any]:
    """Field values of a LinCombOutput, terms in canonical text order"""
    terms = sorted(
        (_term(operad, element, coefficient) for element, coefficient in x.items()),
        key=lambda term: term.element,
    )
    total = format_coefficient(x.total_multiplicity())
    return dict(
        operad=operad.name,
        text=operad.format_lincomb(x),
        terms=terms,
        term_count=len(terms),
        total_multiplicity=total,
        **extra,
    )


@lru_cache(maxsize=1)
def load_report_schema() -> dict:
    with open(REPORT_SCHEMA_PATH, "r") as f:
        return json.load(f)


def validate_report(record: Dict[str, Any]) -> Dict[str, Any]:
    """
    Validate one report record against the law report schema.

    Raises:
        jsonschema.ValidationError: If the record does not match
    """
    jsonschema.validate(instance=record, schema=load_report_schema())
    return record


def check_output(suite: str, reports: List[LawReport]) -> CheckOutput:
    records = [validate_report(report.to_dict()) for report in reports]
    return CheckOutput(
        suite=suite,
        report_count=len(records),
        unexpected_count=sum(report.unexpected for report in reports),
        reports=records,
    )
