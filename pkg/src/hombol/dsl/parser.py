"""Recursive-descent parser for the identity language.

Grammar (whitespace-insensitive)::

    identity := expr "==" expr
    expr     := ["-"] term { ("+" | "-") term }       leading "-" means "0 -"
    term     := { factor "*" } atom
    factor   := rational | "(-1)^(" degpoly ")"
    degpoly  := degmono { "+" degmono }
    degmono  := "|" ident "|" { "*" "|" ident "|" }
    atom     := ident | "a" ["^" nat] "(" expr ")" | "[" expr "," expr "]"
              | "{" expr "," expr "," expr "}" | "(" expr ")" | "0"
    rational := ["-"] nat ["/" nat]

``a`` is reserved for the twisting map.  Files hold one ``NAME: identity``
per entry; ``#`` starts a comment and indented lines continue the previous
entry.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from ..errors import AlgebraError
from .ast import Bracket, Identity, KoszulSign, Scaled, Sum, Triple, Twist, Var, Zero

TWIST_SYMBOL = "a"

_TOKEN = re.compile(r"\s*(?:(?P<nat>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>==|[-+*/^()\[\]{},|]))")


class ParseError(AlgebraError, ValueError):
    def __init__(self, message: str, line: int, column: int, expected=()):
        self.line = line
        self.column = column
        self.expected = tuple(sorted(expected))
        detail = f" (expected one of: {', '.join(self.expected)})" if self.expected else ""
        super().__init__(f"{line}:{column}: {message}{detail}")


@dataclass(frozen=True)
class Token:
    kind: str  # 'nat', 'ident', 'op', 'eof'
    text: str
    offset: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    n = len(text)
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            line, col = _line_col(text, pos)
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        tokens.append(Token(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(Token("eof", "", n))
    return tokens


def _line_col(text: str, offset: int) -> tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    col = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, col


class _Parser:
    def __init__(self, text: str, line_offset: int = 0):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0
        self.line_offset = line_offset

    # -- token helpers
    def peek(self, k: int = 0) -> Token:
        return self.tokens[min(self.i + k, len(self.tokens) - 1)]

    def at(self, text: str, k: int = 0) -> bool:
        t = self.peek(k)
        return t.kind == "op" and t.text == text

    def error(self, message: str, expected=()) -> ParseError:
        line, col = _line_col(self.text, self.peek().offset)
        return ParseError(message, line + self.line_offset, col, expected)

    def expect(self, text: str) -> Token:
        t = self.peek()
        if t.kind == "op" and t.text == text:
            self.i += 1
            return t
        shown = t.text or "end of input"
        raise self.error(f"unexpected {shown!r}", {repr(text)})

    def nat(self) -> int:
        t = self.peek()
        if t.kind != "nat":
            raise self.error(f"unexpected {t.text or 'end of input'!r}", {"natural number"})
        self.i += 1
        return int(t.text)

    def ident(self) -> str:
        t = self.peek()
        if t.kind != "ident":
            raise self.error(f"unexpected {t.text or 'end of input'!r}", {"identifier"})
        self.i += 1
        return t.text

    # -- grammar
    def identity(self) -> Identity:
        lhs = self.expr()
        self.expect("==")
        rhs = self.expr()
        if self.peek().kind != "eof":
            raise self.error(f"unexpected {self.peek().text!r} after identity", {"end of input"})
        return Identity(lhs, rhs)

    def expr(self):
        terms = []
        if self.at("-") and not self._rational_ahead():
            self.i += 1
            terms = [(1, Zero()), (-1, self.term())]
        else:
            terms = [(1, self.term())]
        while self.at("+") or self.at("-"):
            s = 1 if self.peek().text == "+" else -1
            self.i += 1
            terms.append((s, self.term()))
        return terms[0][1] if len(terms) == 1 else Sum(tuple(terms))

    def _rational_ahead(self) -> bool:
        """Is a rational factor (followed by '*') starting here?"""
        k = 0
        if self.at("-"):
            k = 1
        if self.peek(k).kind != "nat":
            return False
        k += 1
        if self.at("/", k):
            if self.peek(k + 1).kind != "nat":
                return False
            k += 2
        return self.at("*", k)

    def _koszul_ahead(self) -> bool:
        return (
            self.at("(") and self.at("-", 1) and self.peek(2).kind == "nat"
            and self.peek(2).text == "1" and self.at(")", 3) and self.at("^", 4)
        )

    def term(self):
        factors = []
        while True:
            if self._rational_ahead():
                factors.append(("q", self.rational()))
            elif self._koszul_ahead():
                self.i += 5
                self.expect("(")
                poly = self.degpoly()
                self.expect(")")
                factors.append(("k", poly))
            else:
                break
            self.expect("*")
        node = self.atom()
        for kind, value in reversed(factors):
            node = Scaled(value, node) if kind == "q" else KoszulSign(value, node)
        return node

    def rational(self) -> Fraction:
        neg = False
        if self.at("-"):
            self.i += 1
            neg = True
        num = self.nat()
        den = 1
        if self.at("/"):
            self.i += 1
            if self.peek().text == "0":
                raise self.error("zero denominator")
            den = self.nat()
        q = Fraction(num, den)
        return -q if neg else q

    def degpoly(self):
        monos = [self.degmono()]
        while self.at("+"):
            self.i += 1
            monos.append(self.degmono())
        return tuple(monos)

    def degmono(self):
        names = [self.degsym()]
        while self.at("*"):
            self.i += 1
            names.append(self.degsym())
        return tuple(names)

    def degsym(self) -> str:
        self.expect("|")
        name = self.ident()
        self.expect("|")
        return name

    def atom(self):
        t = self.peek()
        if t.kind == "ident":
            if t.text == TWIST_SYMBOL:
                self.i += 1
                power = 1
                if self.at("^"):
                    self.i += 1
                    power = self.nat()
                self.expect("(")
                arg = self.expr()
                self.expect(")")
                return Twist(power, arg)
            self.i += 1
            return Var(t.text)
        if t.kind == "nat":
            if t.text == "0":
                self.i += 1
                return Zero()
            raise self.error(f"a number must be followed by '*'", {"'*'"})
        if self.at("["):
            self.i += 1
            left = self.expr()
            self.expect(",")
            right = self.expr()
            self.expect("]")
            return Bracket(left, right)
        if self.at("{"):
            self.i += 1
            first = self.expr()
            self.expect(",")
            second = self.expr()
            self.expect(",")
            third = self.expr()
            self.expect("}")
            return Triple(first, second, third)
        if self.at("("):
            self.i += 1
            inner = self.expr()
            self.expect(")")
            return inner
        shown = t.text or "end of input"
        raise self.error(f"unexpected {shown!r}", {"identifier", "'a'", "'['", "'{'", "'('", "'0'"})


def _validate(ident: Identity, text: str, line_offset: int) -> Identity:
    missing = ident.degree_symbols() - set(ident.variables())
    if missing:
        raise ParseError(
            f"degree symbol(s) {', '.join('|' + v + '|' for v in sorted(missing))} "
            "name no quantified variable", 1 + line_offset, 1,
        )
    return ident


def parse_identity(text: str, name: str = "", line_offset: int = 0) -> Identity:
    p = _Parser(text, line_offset)
    ident = p.identity()
    if name:
        ident = Identity(ident.lhs, ident.rhs, name)
    return _validate(ident, text, line_offset)


_ENTRY = re.compile(r"^([A-Za-z0-9_.\-]+)\s*:(.*)$")


def parse_identity_file(text: str) -> list[Identity]:
    """Parse ``NAME: identity`` entries."""
    entries: list[tuple[str, int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        if line[0].isspace():
            if not entries:
                raise ParseError("continuation line before any entry", lineno, 1)
            entries[-1][2].append(line)
            continue
        m = _ENTRY.match(line)
        if not m:
            raise ParseError("expected 'NAME: identity'", lineno, 1, {"entry name"})
        entries.append((m.group(1), lineno, [" " * (m.start(2)) + m.group(2)]))
    names = [e[0] for e in entries]
    dupes = {n for n in names if names.count(n) > 1}
    if dupes:
        raise ParseError(f"duplicate entry name(s): {', '.join(sorted(dupes))}", 1, 1)
    return [parse_identity("\n".join(body), name, lineno - 1) for name, lineno, body in entries]
