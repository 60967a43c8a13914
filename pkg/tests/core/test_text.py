"""
Tests for the canonical text grammars
"""

from fractions import Fraction

import pytest

from species_operads.core.errors import TreeSyntaxError
from species_operads.core.lincomb import LinComb
from species_operads.core.text import (
    format_lincomb,
    parse_lincomb,
    parse_nested,
    split_top_level,
)


class TestParseNested:
    """Test the nested expression parser"""

    def test_labels_and_children(self):
        """Test a plain tree expression"""
        expr = parse_nested("1(a, 3)")

        assert expr.head == "1"
        assert not expr.bracketed
        assert [child.head for child in expr.children] == ["a", "3"]

    def test_bracketed_heads(self):
        """Test bracketed payloads keep nested brackets and commas"""
        expr = parse_nested("[1(2,3)]([{a,b}])")

        assert expr.head == "1(2,3)"
        assert expr.bracketed
        assert expr.children[0].head == "{a,b}"

    def test_nested_bracket_payload(self):
        """Test a payload may itself contain bracketed blocks"""
        expr = parse_nested("[[{1}]([{2}])]")

        assert expr.head == "[{1}]([{2}])"

    def test_error_position(self):
        """Test a missing label reports where parsing stopped"""
        with pytest.raises(TreeSyntaxError) as excinfo:
            parse_nested("1(2,")

        assert excinfo.value.position == 4

    def test_trailing_input(self):
        """Test unbalanced closing parenthesis is rejected"""
        with pytest.raises(TreeSyntaxError):
            parse_nested("1(2))")

    def test_unclosed_bracket(self):
        """Test an unclosed bracket is rejected"""
        with pytest.raises(TreeSyntaxError):
            parse_nested("[1(2)")


class TestLinCombText:
    """Test formatting and parsing of linear combinations"""

    def test_format_sorted_with_signs(self):
        """Test terms are sorted by text and unit coefficients omitted"""
        x = LinComb({"b": 1, "a": -2, "c": Fraction(3, 2)})

        assert format_lincomb(x) == "-2*a + b + 3/2*c"

    def test_format_zero(self):
        """Test the zero combination prints as 0"""
        assert format_lincomb(LinComb()) == "0"

    def test_parse(self):
        """Test signs and coefficients are read back"""
        assert parse_lincomb("2*a - b", str) == LinComb({"a": 2, "b": -1})

    def test_parse_leading_sign(self):
        """Test a leading minus"""
        assert parse_lincomb("-a + 3/2*b", str) == LinComb({"a": -1, "b": Fraction(3, 2)})

    def test_parse_zero(self):
        """Test 0 parses to the zero combination"""
        assert parse_lincomb("0", str) == LinComb()

    @pytest.mark.parametrize("text", ["a", "-2*a + b + 3/2*c", "1(2(3)) + 1(2,3)"])
    def test_canonical_text_is_stable(self, text):
        """Test canonical text survives parse and format"""
        assert format_lincomb(parse_lincomb(text, str)) == text

    def test_empty_term(self):
        """Test a dangling separator is a syntax error"""
        with pytest.raises(TreeSyntaxError):
            parse_lincomb("a + ", str)

    def test_zero_denominator(self):
        """Test a coefficient n/0 is a syntax error at the start of its term"""
        with pytest.raises(TreeSyntaxError) as excinfo:
            parse_lincomb("a + 1/0*b", str)

        assert excinfo.value.position == 3
        assert "Zero denominator" in str(excinfo.value)

    def test_split_ignores_nested_separators(self):
        """Test separators inside brackets do not split"""
        parts = split_top_level("[1(2-3)] + b", "+-")

        assert [chunk.strip() for _, chunk in parts] == ["[1(2-3)]", "b"]
