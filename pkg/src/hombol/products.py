"""Derived binary products and associators.

The minus (supercommutator) and plus (super-Jordan) algebras take a scale
``scale`` in front of the product.  The default of 1 matches the worked
tables in the literature this package reproduces; ``Fraction(1, 2)`` gives
the normalised convention.  Every Bol-type axiom is homogeneous under
``([,], {,,}) -> (s[,], s^2{,,})`` so verdicts do not depend on the choice.
"""

from __future__ import annotations

from fractions import Fraction

from .core import BinaryStructure, SuperAlgebra, SuperVector, as_scalar, sign
from .errors import InvalidParam, MissingBinary

MINUS = -1
PLUS = 1


def _scale(scale) -> Fraction:
    s = as_scalar(scale)
    if s == 0:
        raise InvalidParam("scale must be nonzero")
    return s


def parse_jordan_sign(value) -> int:
    """Normalise a Jordan-associator sign given as +-1 or 'minus'/'plus'."""
    if value in ("minus", "-", -1):
        return MINUS
    if value in ("plus", "+", 1):
        return PLUS
    raise InvalidParam(f"jordan sign must be 'minus' or 'plus', got {value!r}")


def _require_binary(a: SuperAlgebra) -> BinaryStructure:
    if a.binary is None:
        raise MissingBinary(f"algebra {a.name or '<unnamed>'} has no binary product")
    return a.binary


def _graded_symmetrisation(a: SuperAlgebra, scale, parity: int, suffix: str) -> SuperAlgebra:
    mul = _require_binary(a)
    lam = _scale(scale)
    deg = a.degrees

    def entry(i, j):
        v = mul.product(i, j).add_scaled(parity * sign(deg[i] * deg[j]), mul.product(j, i))
        return v * lam

    table = BinaryStructure.from_function(a.dimension, entry)
    name = f"{a.name}{suffix}" if a.name else ""
    return SuperAlgebra(a.grading, binary=table, twist=a.twist, name=name)


def supercommutator(a: SuperAlgebra, scale=1) -> SuperAlgebra:
    """Minus algebra: ``[x, y] = s (xy - (-1)^{|x||y|} yx)``."""
    return _graded_symmetrisation(a, scale, -1, "^-")


def super_jordan(a: SuperAlgebra, scale=1) -> SuperAlgebra:
    """Plus algebra: ``x o y = s (xy + (-1)^{|x||y|} yx)``."""
    return _graded_symmetrisation(a, scale, 1, "^+")


def hom_associator(a: SuperAlgebra, x: SuperVector, y: SuperVector, z: SuperVector) -> SuperVector:
    """``(xy) alpha(z) - alpha(x) (yz)``."""
    mul = _require_binary(a)
    alpha = a.alpha
    return mul(mul(x, y), alpha(z)) - mul(alpha(x), mul(y, z))


def hom_jordan_associator(plus: SuperAlgebra, x: SuperVector, y: SuperVector, z: SuperVector,
                          jordan_sign=MINUS) -> SuperVector:
    """``(x o y) o alpha(z) -+ alpha(x) o (y o z)`` evaluated in the plus algebra.

    ``jordan_sign=MINUS`` is the form whose triple products reproduce the known Bol
    tables; ``PLUS`` is kept as a switch for comparison.
    """
    circ = _require_binary(plus)
    alpha = plus.alpha
    left = circ(circ(x, y), alpha(z))
    return left.add_scaled(parse_jordan_sign(jordan_sign), circ(alpha(x), circ(y, z)))


def rescale(a: SuperAlgebra, scale) -> SuperAlgebra:
    """``(s[,], s^2{,,})``: the rescaling under which Bol-type axioms are homogeneous."""
    lam = _scale(scale)
    lam2 = lam * lam
    binary = a.binary.map_values(lambda v: v * lam) if a.binary is not None else None
    ternary = a.ternary.map_values(lambda v: v * lam2) if a.ternary is not None else None
    return a.replace(binary=binary, ternary=ternary)
