"""
Canonical text forms.

Two grammars are shared by the whole package:

* nested expressions `HEAD ( '(' EXPR (',' EXPR)* ')' )?` where HEAD is either
  a label or a bracketed `[...]` payload (used by block trees), and
* linear combinations `TERM (('+' | '-') TERM)*` with `TERM := (COEF '*')? BASIS`.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Tuple, TypeVar

from .errors import TreeSyntaxError
from .lincomb import LinComb

B = TypeVar("B")

_OPEN = "([{"
_CLOSE = ")]}"
_LABEL_CHARS = re.compile(r"[A-Za-z0-9_]")
_COEFFICIENT = re.compile(r"^\s*(\d+(?:/\d+)?)\s*\*\s*")


@dataclass(frozen=True)
class NestedExpr:
    """Parsed nested expression before any tree semantics are applied"""

    head: str
    bracketed: bool
    children: Tuple["NestedExpr", ...] = ()


class _NestedParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str) -> TreeSyntaxError:
        return TreeSyntaxError(message, self.text, self.pos)

    def skip_space(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_space()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, char: str) -> None:
        if self.peek() != char:
            found = self.peek() or "end of input"
            raise self.error(f"Expected {char!r}, found {found!r}")
        self.pos += 1

    def head(self) -> Tuple[str, bool]:
        if self.peek() == "[":
            start = self.pos + 1
            depth = 0
            while self.pos < len(self.text):
                char = self.text[self.pos]
                if char == "[":
                    depth += 1
                elif char == "]":
                    depth -= 1
                    if depth == 0:
                        payload = self.text[start : self.pos]
                        self.pos += 1
                        return payload.strip(), True
                self.pos += 1
            raise TreeSyntaxError("Unclosed '['", self.text, start - 1)
        start = self.pos
        while self.pos < len(self.text) and _LABEL_CHARS.match(self.text[self.pos]):
            self.pos += 1
        if start == self.pos:
            found = self.text[self.pos] if self.pos < len(self.text) else "end of input"
            raise self.error(f"Expected a label, found {found!r}")
        return self.text[start : self.pos], False

    def expr(self) -> NestedExpr:
        head, bracketed = self.head()
        children: List[NestedExpr] = []
        if self.peek() == "(":
            self.pos += 1
            children.append(self.expr())
            while self.peek() == ",":
                self.pos += 1
                children.append(self.expr())
            self.expect(")")
        return NestedExpr(head, bracketed, tuple(children))


def parse_nested(text: str) -> NestedExpr:
    """
    Parse a nested expression such as `1(a(3,4,b(c)))` or `[1(2)]([a])`.

    Raises:
        TreeSyntaxError: On malformed input, with the failing position
    """
    parser = _NestedParser(text)
    result = parser.expr()
    if parser.peek():
        raise parser.error(f"Unexpected trailing input {parser.peek()!r}")
    return result


def split_top_level(text: str, separators: str) -> List[Tuple[str, str]]:
    """
    Split text at separator characters that are not nested in brackets.

    Returns:
        (separator, chunk) pairs; the first separator is the empty string
    """
    parts: List[Tuple[str, str]] = []
    depth = 0
    current: List[str] = []
    separator = ""
    for position, char in enumerate(text):
        if char in _OPEN:
            depth += 1
        elif char in _CLOSE:
            depth -= 1
            if depth < 0:
                raise TreeSyntaxError(f"Unbalanced {char!r}", text, position)
        if depth == 0 and char in separators:
            parts.append((separator, "".join(current)))
            separator = char
            current = []
        else:
            current.append(char)
    if depth != 0:
        raise TreeSyntaxError("Unbalanced brackets", text, len(text))
    parts.append((separator, "".join(current)))
    return parts


def format_coefficient(coefficient: Fraction) -> str:
    if coefficient.denominator == 1:
        return str(coefficient.numerator)
    return f"{coefficient.numerator}/{coefficient.denominator}"


def format_lincomb(x: LinComb, format_basis: Callable[[object], str] = str) -> str:
    """
    Canonical text of a linear combination.

    Terms are sorted by the text of their basis element, a coefficient of 1 is
    omitted and the zero combination prints as "0".
    """
    if not x:
        return "0"
    terms = sorted(((format_basis(b), c) for b, c in x.items()), key=lambda t: t[0])
    pieces: List[str] = []
    for index, (text, coefficient) in enumerate(terms):
        sign = "-" if coefficient < 0 else "+"
        magnitude = abs(coefficient)
        body = text if magnitude == 1 else f"{format_coefficient(magnitude)}*{text}"
        if index == 0:
            pieces.append(body if sign == "+" else f"-{body}")
        else:
            pieces.append(f" {sign} {body}")
    return "".join(pieces)


def parse_lincomb(text: str, parse_basis: Callable[[str], B]) -> LinComb[B]:
    """
    Parse the canonical text of a linear combination.

    Args:
        text: Text such as `2*1(a) - 1(2)` or `0`
        parse_basis: Parser for a single basis element

    Raises:
        TreeSyntaxError: On a malformed term
    """
    if text.strip() == "0":
        return LinComb()
    terms = []
    chunks = split_top_level(text, "+-")
    offsets = [0]
    for _, chunk in chunks:
        offsets.append(offsets[-1] + len(chunk) + 1)
    for index, (separator, chunk) in enumerate(chunks):
        if not chunk.strip():
            # A leading sign leaves an empty first chunk
            if index == 0 and len(chunks) > 1:
                continue
            raise TreeSyntaxError("Empty term in linear combination", text, None)
        sign = -1 if separator == "-" else 1
        coefficient = Fraction(1)
        match = _COEFFICIENT.match(chunk)
        if match:
            try:
                coefficient = Fraction(match.group(1))
            except ZeroDivisionError:
                raise TreeSyntaxError(
                    f"Zero denominator in coefficient {match.group(1)!r}",
                    text,
                    offsets[index],
                ) from None
            chunk = chunk[match.end() :]
        terms.append((parse_basis(chunk.strip()), sign * coefficient))
    return LinComb(terms)
