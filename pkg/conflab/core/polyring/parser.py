"""
Recursive-descent parser for the polynomial grammar::

    expr     := term (('+'|'-') term)*
    term     := ['-'|'+'] factor ('*' factor)*
    factor   := atom ('^' uint)?
    atom     := rational | var | '(' expr ')'
    rational := int ('/' uint)?
    var      := [a-z][a-z0-9_]*

Whitespace is insignificant. A leading sign on a term is accepted, and
formatted output such as ``-d - 2*l`` parses back.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from conflab.config import Settings
from conflab.core.exceptions import PolynomialSyntaxError, UndeclaredVariableError
from conflab.core.polyring.multipoly import MultiPoly
from conflab.core.polyring.variables import RESERVED

_SYMBOLS = "+-*/^()"

# exponents may exceed the degree bound by at most this factor
EXPONENT_FACTOR = 8


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", one of _SYMBOLS, or "end"
    text: str
    offset: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    i = 0
    byte = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            byte += len(ch.encode("utf-8"))
            i += 1
            continue
        start, start_byte = i, byte
        if ch.isascii() and ch.isdigit():
            while i < n and text[i].isascii() and text[i].isdigit():
                i += 1
            tokens.append(Token("int", text[start:i], start_byte))
        elif "a" <= ch <= "z":
            while i < n and (
                "a" <= text[i] <= "z" or text[i] == "_" or ("0" <= text[i] <= "9")
            ):
                i += 1
            tokens.append(Token("name", text[start:i], start_byte))
        elif ch in _SYMBOLS:
            i += 1
            tokens.append(Token(ch, ch, start_byte))
        else:
            raise PolynomialSyntaxError(f"unexpected character {ch!r}", byte, text)
        byte = start_byte + len(text[start:i].encode("utf-8"))
    tokens.append(Token("end", "", byte))
    return tokens


class _Parser:
    def __init__(self, text: str, allowed: Optional[frozenset[str]]):
        self.text = text
        self.tokens = tokenize(text)
        self.pos = 0
        self.allowed = allowed

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def _advance(self) -> Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def _expect(self, kind: str) -> Token:
        token = self.current
        if token.kind != kind:
            found = token.text or "end of input"
            raise PolynomialSyntaxError(
                f"expected '{kind}' but found '{found}'", token.offset, self.text
            )
        return self._advance()

    def parse(self) -> MultiPoly:
        if self.current.kind == "end":
            raise PolynomialSyntaxError("empty expression", 0, self.text)
        result = self._expr()
        if self.current.kind != "end":
            raise PolynomialSyntaxError(
                f"unexpected '{self.current.text}'", self.current.offset, self.text
            )
        return result

    def _expr(self) -> MultiPoly:
        result = self._term()
        while self.current.kind in ("+", "-"):
            op = self._advance().kind
            rhs = self._term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def _term(self) -> MultiPoly:
        negate = False
        if self.current.kind in ("+", "-"):
            negate = self._advance().kind == "-"
        result = self._factor()
        while self.current.kind == "*":
            self._advance()
            result = result * self._factor()
        return -result if negate else result

    def _factor(self) -> MultiPoly:
        base = self._atom()
        if self.current.kind == "^":
            self._advance()
            exponent = self._expect("int")
            limit = max(Settings()["degree_bound"], 1) * EXPONENT_FACTOR
            if int(exponent.text) > limit:
                raise PolynomialSyntaxError(
                    f"exponent {exponent.text} exceeds {limit}",
                    exponent.offset,
                    self.text,
                )
            return base ** int(exponent.text)
        return base

    def _atom(self) -> MultiPoly:
        token = self.current
        if token.kind == "int":
            self._advance()
            value = Fraction(int(token.text))
            if self.current.kind == "/":
                self._advance()
                denom = self._expect("int")
                if int(denom.text) == 0:
                    raise PolynomialSyntaxError(
                        "zero denominator", denom.offset, self.text
                    )
                value = value / int(denom.text)
            return MultiPoly.const(value)
        if token.kind == "name":
            self._advance()
            if self.allowed is not None and token.text not in self.allowed:
                raise UndeclaredVariableError(token.text, token.offset)
            return MultiPoly.var(token.text)
        if token.kind == "(":
            self._advance()
            inner = self._expr()
            self._expect(")")
            return inner
        found = token.text or "end of input"
        raise PolynomialSyntaxError(f"unexpected '{found}'", token.offset, self.text)


def parse(text: str, params: Optional[Iterable[str]] = None) -> MultiPoly:
    """
    Parse polynomial text.

    :param text: Input in the polynomial grammar.
    :param params: Declared parameter names. When given, any other non-reserved
                   name raises :class:`UndeclaredVariableError`; when omitted,
                   every syntactically valid name is accepted.
    :return: The canonical polynomial.
    :raises PolynomialSyntaxError: with the byte offset of the offending token.
    """
    allowed = None
    if params is not None:
        allowed = frozenset(params) | frozenset(RESERVED)
    return _Parser(text, allowed).parse()


def format_poly(p: MultiPoly) -> str:
    return p.format()
