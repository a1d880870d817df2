"""Syntax tree for graded multilinear identities, and its pretty-printer.

The printer emits text the parser maps back to an equal tree, so
``parse_identity(print_identity(t)) == t`` for every tree the parser can
produce.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

# a degree polynomial is a sum of monomials; a monomial is a product of
# degree symbols |v|, stored as the tuple of variable names
DegPoly = tuple[tuple[str, ...], ...]


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Zero:
    pass


@dataclass(frozen=True)
class Twist:
    power: int
    arg: "Expr"


@dataclass(frozen=True)
class Bracket:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Triple:
    first: "Expr"
    second: "Expr"
    third: "Expr"


@dataclass(frozen=True)
class Sum:
    """Signed terms; the parser always produces a leading ``+1``."""

    terms: tuple[tuple[int, "Expr"], ...]


@dataclass(frozen=True)
class Scaled:
    coeff: Fraction
    arg: "Expr"


@dataclass(frozen=True)
class KoszulSign:
    exponent: DegPoly
    arg: "Expr"


Expr = Union[Var, Zero, Twist, Bracket, Triple, Sum, Scaled, KoszulSign]


@dataclass(frozen=True)
class Identity:
    lhs: Expr
    rhs: Expr
    name: str = ""

    def variables(self) -> tuple[str, ...]:
        """Quantified variables in order of first appearance, lhs then rhs."""
        seen: dict[str, None] = {}
        for e in (self.lhs, self.rhs):
            for node in walk(e):
                if isinstance(node, Var):
                    seen.setdefault(node.name, None)
        return tuple(seen)

    def degree_symbols(self) -> set[str]:
        out = set()
        for e in (self.lhs, self.rhs):
            for node in walk(e):
                if isinstance(node, KoszulSign):
                    out.update(v for mono in node.exponent for v in mono)
        return out


def walk(e: Expr) -> Iterator[Expr]:
    """Pre-order, left-to-right traversal."""
    yield e
    if isinstance(e, (Twist, Scaled, KoszulSign)):
        yield from walk(e.arg)
    elif isinstance(e, Bracket):
        yield from walk(e.left)
        yield from walk(e.right)
    elif isinstance(e, Triple):
        yield from walk(e.first)
        yield from walk(e.second)
        yield from walk(e.third)
    elif isinstance(e, Sum):
        for _, t in e.terms:
            yield from walk(t)


def print_degpoly(p: DegPoly) -> str:
    return " + ".join("*".join(f"|{v}|" for v in mono) for mono in p)


def print_expr(e: Expr) -> str:
    if isinstance(e, Var):
        return e.name
    if isinstance(e, Zero):
        return "0"
    if isinstance(e, Twist):
        head = "a" if e.power == 1 else f"a^{e.power}"
        return f"{head}({print_expr(e.arg)})"
    if isinstance(e, Bracket):
        return f"[{print_expr(e.left)},{print_expr(e.right)}]"
    if isinstance(e, Triple):
        return f"{{{print_expr(e.first)},{print_expr(e.second)},{print_expr(e.third)}}}"
    if isinstance(e, Scaled):
        return f"{e.coeff} * {_term_tail(e.arg)}"
    if isinstance(e, KoszulSign):
        return f"(-1)^({print_degpoly(e.exponent)}) * {_term_tail(e.arg)}"
    if isinstance(e, Sum):
        out = []
        for k, (s, t) in enumerate(e.terms):
            text = f"({print_expr(t)})" if isinstance(t, Sum) else print_expr(t)
            if k == 0:
                out.append(text if s > 0 else f"0 - {text}")
            else:
                out.append(f"{'+' if s > 0 else '-'} {text}")
        return " ".join(out)
    raise TypeError(f"not an expression node: {e!r}")


def _term_tail(e: Expr) -> str:
    # what may follow "factor *": another factor chain or an atom
    if isinstance(e, Sum):
        return f"({print_expr(e)})"
    return print_expr(e)


def print_identity(ident: Identity) -> str:
    return f"{print_expr(ident.lhs)} == {print_expr(ident.rhs)}"
