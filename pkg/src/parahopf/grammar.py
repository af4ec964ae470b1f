"""Parsing and deterministic printing of elements.

The grammar, shared by the CLI and the JSON reports:

* letters: ``B+<i>``, ``B-<i>``, ``E(<i><s>,<j><s>)``, ``g``, ``K+``, ``K-``
  and the unit ``I``,
* juxtaposition is the (noncommutative) product,
* coefficients: integers, rationals ``p/q`` and the imaginary unit ``i``;
  ``+`` / ``-`` combine terms, parentheses group.

Printing is deterministic: terms sorted by word (length, then letter order),
coefficient 1 omitted, trailing terms joined with ``+`` / ``-``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import List, Tuple

from .terms import (EMPTY_WORD, IMAG, MINUS, ONE, PLUS, Element, Scalar, Word,
                    anticommutator_symbol, b_letter, G, K_MINUS, K_PLUS)


class ParseError(ValueError):
    pass


_TOKEN_RE = re.compile(
    r"""\s*(?:
        (?P<bletter>B(?P<bsign>[+-])(?P<bindex>\d+))
      | (?P<esym>E\(\s*(?P<ei>\d+)\s*(?P<exi>[+-])\s*,\s*(?P<ej>\d+)\s*(?P<eeta>[+-])\s*\))
      | (?P<kletter>K(?P<ksign>[+-]))
      | (?P<g>g)
      | (?P<unit>I)
      | (?P<imag>i)
      | (?P<int>\d+)
      | (?P<op>[+\-/()])
    )""",
    re.VERBOSE,
)


def _tokenize(text: str) -> List[Tuple[str, object]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            if text[pos:].strip() == "":
                break
            raise ParseError(f"unexpected input at position {pos}: {text[pos:pos+12]!r}")
        pos = m.end()
        if m.group("bletter"):
            sign = PLUS if m.group("bsign") == "+" else MINUS
            tokens.append(("letter", b_letter(int(m.group("bindex")), sign)))
        elif m.group("esym"):
            xi = PLUS if m.group("exi") == "+" else MINUS
            eta = PLUS if m.group("eeta") == "+" else MINUS
            tokens.append(
                ("letter", anticommutator_symbol(int(m.group("ei")), xi, int(m.group("ej")), eta))
            )
        elif m.group("kletter"):
            tokens.append(("letter", K_PLUS if m.group("ksign") == "+" else K_MINUS))
        elif m.group("g"):
            tokens.append(("letter", G))
        elif m.group("unit"):
            tokens.append(("unit", None))
        elif m.group("imag"):
            tokens.append(("imag", None))
        elif m.group("int"):
            tokens.append(("int", int(m.group("int"))))
        else:
            tokens.append((m.group("op"), None))
    return tokens


class _Parser:
    def __init__(self, tokens: List[Tuple[str, object]]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> str:
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else ""

    def next(self) -> Tuple[str, object]:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def parse_expression(self) -> Element:
        result = self.parse_term()
        while self.peek() in ("+", "-"):
            op, _ = self.next()
            term = self.parse_term()
            result = result + term if op == "+" else result - term
        return result

    def parse_term(self) -> Element:
        negate = False
        while self.peek() == "-":
            self.next()
            negate = not negate
        result = self.parse_factor()
        while self.peek() in ("letter", "unit", "imag", "int", "("):
            result = result * self.parse_factor()
        return -result if negate else result

    def parse_factor(self) -> Element:
        if self.peek() == "":
            raise ParseError("unexpected end of input")
        kind, value = self.next()
        if kind == "letter":
            return Element.of(value)
        if kind == "unit":
            return Element.one()
        if kind == "imag":
            return Element.of(IMAG)
        if kind == "int":
            num = Fraction(value)
            if self.peek() == "/":
                self.next()
                dkind, dvalue = self.next() if self.peek() == "int" else ("", None)
                if dkind != "int" or dvalue == 0:
                    raise ParseError("malformed rational coefficient")
                num /= dvalue
            return Element.of(num)
        if kind == "(":
            inner = self.parse_expression()
            if self.peek() != ")":
                raise ParseError("missing closing parenthesis")
            self.next()
            return inner
        raise ParseError(f"unexpected token {kind!r}")


def parse_element(text: str) -> Element:
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty expression")
    parser = _Parser(tokens)
    result = parser.parse_expression()
    if parser.pos != len(tokens):
        raise ParseError("trailing input after expression")
    return result


def format_scalar(c: Scalar) -> str:
    if not c.im:
        return str(c.re)
    if not c.re:
        if c.im == 1:
            return "i"
        if c.im == -1:
            return "-i"
        return f"{c.im} i"
    im = f"+ {c.im} i" if c.im > 0 else f"- {-c.im} i"
    if c.im == 1:
        im = "+ i"
    elif c.im == -1:
        im = "- i"
    return f"({c.re} {im})"


def format_word(w: Word) -> str:
    return repr(w)


def _format_term(c: Scalar, w: Word) -> str:
    if w == EMPTY_WORD:
        return "I" if c == ONE else f"{format_scalar(c)} I"
    if c == ONE:
        return format_word(w)
    return f"{format_scalar(c)} {format_word(w)}"


def _is_negative(c: Scalar) -> bool:
    return c.re < 0 or (c.re == 0 and c.im < 0)


def format_element(e: Element) -> str:
    if not e.terms:
        return "0"
    # leading term = longest word (ties broken by the letter order), unit last
    items = sorted(e.terms.items(),
                   key=lambda kv: (-len(kv[0]), kv[0].sort_key[1]))
    parts = [_format_term(items[0][1], items[0][0])]
    for w, c in items[1:]:
        if _is_negative(c):
            parts.append("- " + _format_term(-c, w))
        else:
            parts.append("+ " + _format_term(c, w))
    return " ".join(parts)
