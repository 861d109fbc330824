"""Tokenizer and polynomial-expression parser for the input language.

Polynomials use ^, *, +, -, integer coefficients and parentheses;
whitespace is insignificant.  The same tokenizer drives the session file
parser, so every token carries its source position for error reports.
"""

from dataclasses import dataclass

from .errors import SessionSyntaxError, UnknownVariable

SYMBOLS = ("(", ")", ",", "^", "*", "+", "-", "=")


@dataclass(frozen=True)
class Token:
    kind: str  # "name" | "int" | "sym" | "end"
    text: str
    line: int
    col: int


def tokenize(text, first_line=1):
    """Tokenize a chunk of input into names, integers and symbols."""
    tokens = []
    line = first_line
    col = 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(Token("int", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(Token("name", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch in SYMBOLS:
            tokens.append(Token("sym", ch, line, col))
            i += 1
            col += 1
            continue
        raise SessionSyntaxError(f"unexpected character {ch!r}", line, col)
    tokens.append(Token("end", "", line, col))
    return tokens


class TokenStream:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        tok = self.tokens[self.pos]
        if tok.kind != "end":
            self.pos += 1
        return tok

    def accept_sym(self, text):
        tok = self.peek()
        if tok.kind == "sym" and tok.text == text:
            self.next()
            return True
        return False

    def expect_sym(self, text):
        tok = self.next()
        if tok.kind != "sym" or tok.text != text:
            raise SessionSyntaxError(f"expected {text!r}, found {tok.text!r}", tok.line, tok.col)
        return tok

    def expect_name(self, what="name"):
        tok = self.next()
        if tok.kind != "name":
            raise SessionSyntaxError(f"expected {what}, found {tok.text!r}", tok.line, tok.col)
        return tok

    def expect_int(self):
        tok = self.next()
        if tok.kind != "int":
            raise SessionSyntaxError(f"expected integer, found {tok.text!r}", tok.line, tok.col)
        return int(tok.text)


def parse_expression(ring, stream):
    """Parse sum-of-terms into a polynomial of the given ring."""
    result = _parse_term(ring, stream, negate=stream.accept_sym("-"))
    while True:
        if stream.accept_sym("+"):
            result = result + _parse_term(ring, stream, negate=False)
        elif stream.accept_sym("-"):
            result = result + _parse_term(ring, stream, negate=True)
        else:
            return result


def _parse_term(ring, stream, negate):
    result = _parse_factor(ring, stream)
    while stream.accept_sym("*"):
        result = result * _parse_factor(ring, stream)
    return -result if negate else result


def _parse_factor(ring, stream):
    base = _parse_atom(ring, stream)
    if stream.accept_sym("^"):
        tok = stream.peek()
        exp = stream.expect_int()
        if exp < 0:
            raise SessionSyntaxError("negative exponent", tok.line, tok.col)
        return base**exp
    return base


def _parse_atom(ring, stream):
    tok = stream.next()
    if tok.kind == "int":
        return ring.constant(int(tok.text))
    if tok.kind == "name":
        if tok.text not in ring.names:
            raise UnknownVariable(f"unknown variable {tok.text!r}", tok.line, tok.col)
        return ring.variable(tok.text)
    if tok.kind == "sym" and tok.text == "(":
        inner = parse_expression(ring, stream)
        stream.expect_sym(")")
        return inner
    if tok.kind == "sym" and tok.text == "-":
        return -_parse_atom(ring, stream)
    raise SessionSyntaxError(f"expected a polynomial atom, found {tok.text!r}", tok.line, tok.col)


def parse_polynomial(ring, text):
    stream = TokenStream(tokenize(text))
    poly = parse_expression(ring, stream)
    tok = stream.peek()
    if tok.kind != "end":
        raise SessionSyntaxError(f"trailing input {tok.text!r}", tok.line, tok.col)
    return poly


def parse_generator_list(ring, stream):
    """Parse '(' expr, expr, ... ')' into a tuple of polynomials."""
    stream.expect_sym("(")
    gens = []
    if stream.accept_sym(")"):
        return tuple(gens)
    gens.append(parse_expression(ring, stream))
    while stream.accept_sym(","):
        gens.append(parse_expression(ring, stream))
    stream.expect_sym(")")
    return tuple(gens)
