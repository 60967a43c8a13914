"""
Tests for structured JSON output
"""

import json

import jsonschema
import pytest

from species_operads.lawcheck.types import Bounds, Law, LawReport, Verdict
from species_operads.operads.registry import get_registry, resolve_operad
from species_operads.render.json_output import (
    ComposeOutput,
    DimensionRow,
    DimsOutput,
    check_output,
    lincomb_output,
    validate_report,
)


class TestOutputModels:
    """Test camelCase serialization"""

    def test_lincomb_output(self):
        """Test terms are listed in canonical order with counts"""
        prelie = get_registry().get("prelie")
        x = prelie.compose(prelie.parse("1(2(3,4))"), "2", prelie.parse("a(b)"))

        output = ComposeOutput(
            **lincomb_output(prelie, x, outer="1(2(3,4))", at="2", inner="a(b)")
        )
        data = json.loads(output.to_json())

        assert data["termCount"] == 4
        assert data["totalMultiplicity"] == "4"
        assert data["outer"] == "1(2(3,4))"
        assert [term["element"] for term in data["terms"]] == sorted(
            term["element"] for term in data["terms"]
        )

    def test_composition_blocks(self):
        """Test composite terms carry their block structure"""
        box = resolve_operad("box:com")
        x = box.compose(box.parse("[{1,2}]([{3}])"), "2", box.parse("[{a}]([{b}])"))

        data = json.loads(ComposeOutput(**lincomb_output(box, x, outer="", at="2", inner="")).to_json())

        assert data["terms"][0]["blocks"]["blocks"] == [["1", "a"], ["3"], ["b"]]

    def test_populate_by_name(self):
        """Test models accept snake_case and emit camelCase"""
        output = DimsOutput(p="nap", q="com", rows=[DimensionRow(n=1, dimension=1)])

        assert json.loads(output.to_json()) == {
            "p": "nap",
            "q": "com",
            "rows": [{"n": 1, "dimension": 1}],
        }


class TestReportValidation:
    """Test law reports against the packaged schema"""

    def setup_method(self):
        """Setup a holding report"""
        self.report = LawReport(
            law=Law.U1,
            subject="nap",
            instances=12,
            verdict=Verdict.HOLDS,
            bounds=Bounds(3, 2, 2).to_dict(),
        )

    def test_valid_report(self):
        """Test a real report validates unchanged"""
        record = self.report.to_dict()

        assert validate_report(record) is record

    def test_holds_with_witness_rejected(self):
        """Test the schema ties the verdict to the witness"""
        record = self.report.to_dict()
        record["witness"] = {"inputs": {}, "lhs": "a", "rhs": "b"}

        with pytest.raises(jsonschema.ValidationError):
            validate_report(record)

    def test_unknown_law_rejected(self):
        """Test law names are restricted"""
        record = self.report.to_dict()
        record["law"] = "A3"

        with pytest.raises(jsonschema.ValidationError):
            validate_report(record)

    def test_check_output(self):
        """Test the envelope is camelCase and records stay snake_case"""
        data = json.loads(check_output("operads", [self.report]).to_json())

        assert data["reportCount"] == 1
        assert data["unexpectedCount"] == 0
        assert "elapsed_ms" in data["reports"][0]
