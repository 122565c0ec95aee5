"""Shared tokenizer for the expression grammars (words, Laurent polynomials,
one-variable polynomials, and square-zero-generator expressions).

Tokens: integers, single-letter names, and the punctuation ``* ^ + - /``.
Whitespace separates tokens and is otherwise ignored.  Every token carries the
byte offset of its first character so parse errors can point at the input.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError


@dataclass(frozen=True)
class Token:
    kind: str  # "int" | "name" | "*" | "^" | "+" | "-" | "/" | "end"
    text: str
    offset: int

    @property
    def value(self) -> int:
        return int(self.text)


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(Token("int", text[i:j], i))
            i = j
            continue
        if ch.isalpha():
            tokens.append(Token("name", ch, i))
            i += 1
            continue
        if ch in "*^+-/":
            tokens.append(Token(ch, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(Token("end", "", n))
    return tokens


class TokenStream:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def next(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind != "end":
            self.pos += 1
        return tok

    def expect(self, kind: str) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(f"expected {kind!r}, found {tok.text or 'end of input'!r}", tok.offset)
        return self.next()

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.peek().offset)


def read_signed_int(ts: TokenStream) -> int:
    """An integer with an optional leading minus (used after ``^``)."""
    sign = 1
    if ts.peek().kind == "-":
        ts.next()
        sign = -1
    return sign * ts.expect("int").value


def read_coefficient(ts: TokenStream, field):
    """An ``a`` or ``a/b`` literal coerced into the field."""
    num = ts.expect("int").value
    if ts.peek().kind == "/":
        ts.next()
        den = ts.expect("int").value
        if den == 0:
            raise ParseError("zero denominator", ts.tokens[ts.pos - 1].offset)
        return field.from_fraction(num, den)
    return field(num)


def parse_unipoly(text: str, field):
    """Parse ``c*T^k`` sums such as ``T^2 - 3*T + 1/2`` into a UniPoly."""
    from .exactalg import UniPoly

    ts = TokenStream(text)
    coeffs: dict[int, object] = {}
    first = True
    while True:
        tok = ts.peek()
        if tok.kind == "end":
            if first:
                raise ts.error("empty polynomial expression")
            break
        sign = 1
        if tok.kind in "+-":
            if first and tok.kind == "+":
                raise ts.error("polynomial cannot start with '+'")
            ts.next()
            sign = -1 if tok.kind == "-" else 1
        elif not first:
            raise ts.error("expected '+' or '-' between terms")
        first = False

        coeff = field(sign)
        saw_term = False
        tok = ts.peek()
        if tok.kind == "int":
            coeff = coeff * read_coefficient(ts, field)
            saw_term = True
            if ts.peek().kind == "*":
                ts.next()
                tok = ts.peek()
                if tok.kind != "name":
                    raise ts.error("expected T after '*'")
        tok = ts.peek()
        deg = 0
        if tok.kind == "name":
            if tok.text != "T":
                raise ts.error(f"unknown indeterminate {tok.text!r}; expected T")
            ts.next()
            saw_term = True
            deg = 1
            if ts.peek().kind == "^":
                ts.next()
                deg = read_signed_int(ts)
                if deg < 0:
                    raise ParseError("negative exponent in a polynomial", tok.offset)
        if not saw_term:
            raise ts.error("expected a term")
        coeffs[deg] = coeffs.get(deg, field.zero) + coeff

    size = max(coeffs) + 1 if coeffs else 0
    return UniPoly(field, tuple(coeffs.get(k, field.zero) for k in range(size)))
