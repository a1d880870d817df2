"""Seeded random generators for property checks.

All generators take a :class:`random.Random` so runs are reproducible.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .core import BinaryStructure, GradedLinearMap, Grading, SuperAlgebra, SuperVector, TernaryStructure
from .dsl.ast import Bracket, Identity, KoszulSign, Scaled, Sum, Triple, Twist, Var, Zero

# entries of random structure constants: p/q in [-5, 5]
SMALL_RATIONALS = sorted({Fraction(p, q) for p in range(-5, 6) for q in (1, 2, 3)})


def random_scalar(rng: random.Random, nonzero: bool = False) -> Fraction:
    pool = [x for x in SMALL_RATIONALS if x] if nonzero else SMALL_RATIONALS
    return rng.choice(pool)


def random_grading(rng: random.Random, dim: int | None = None) -> Grading:
    dim = dim or rng.randint(1, 3)
    return Grading(tuple(rng.randint(0, 1) for _ in range(dim)))


def _sparse_entry(rng, g: Grading, parity: int, density: float) -> SuperVector:
    return SuperVector(
        random_scalar(rng) if d == parity and rng.random() < density else 0 for d in g.degrees
    )


def random_binary(rng: random.Random, g: Grading, density: float = 0.5) -> BinaryStructure:
    deg = g.degrees
    return BinaryStructure.from_function(
        g.dimension, lambda i, j: _sparse_entry(rng, g, (deg[i] + deg[j]) % 2, density)
    )


def random_ternary(rng: random.Random, g: Grading, density: float = 0.3) -> TernaryStructure:
    deg = g.degrees
    return TernaryStructure.from_function(
        g.dimension, lambda i, j, l: _sparse_entry(rng, g, (deg[i] + deg[j] + deg[l]) % 2, density)
    )


def random_even_map(rng: random.Random, g: Grading, invertible_diagonal: bool = False) -> GradedLinearMap:
    """Block-diagonal matrix; optionally diagonal with nonzero entries."""
    n = g.dimension
    deg = g.degrees
    rows = [[Fraction(0)] * n for _ in range(n)]
    for r in range(n):
        for c in range(n):
            if invertible_diagonal:
                if r == c:
                    rows[r][c] = random_scalar(rng, nonzero=True)
            elif deg[r] == deg[c]:
                rows[r][c] = random_scalar(rng)
    return GradedLinearMap(rows)


def random_binary_algebra(rng: random.Random, dim: int | None = None, twisted: bool = True) -> SuperAlgebra:
    g = random_grading(rng, dim)
    twist = random_even_map(rng, g) if twisted else None
    return SuperAlgebra(g, random_binary(rng, g), twist=twist, name="random")


def random_homogeneous(rng: random.Random, g: Grading, degree: int | None = None) -> SuperVector:
    """Random nonzero combination of basis vectors of one degree."""
    present = sorted(set(g.degrees))
    if degree is None or degree not in present:
        degree = rng.choice(present)
    block = g.block(degree)
    coeffs = [0] * g.dimension
    while not any(coeffs):
        for i in block:
            coeffs[i] = random_scalar(rng)
    return SuperVector(coeffs)


# -- random syntax trees in the shape the parser produces

_VARS = ("x", "y", "z", "w")


def _random_degpoly(rng, names):
    return tuple(
        tuple(rng.choice(names) for _ in range(rng.randint(1, 2)))
        for _ in range(rng.randint(1, 3))
    )


def random_expr(rng: random.Random, depth: int = 4, names=_VARS):
    """A tree the parser can produce: sums have a leading ``+1`` or are ``0 - t``."""
    if depth <= 0 or rng.random() < 0.25:
        return Zero() if rng.random() < 0.1 else Var(rng.choice(names))
    kind = rng.choice(("twist", "bracket", "triple", "sum", "scaled", "koszul"))
    sub = lambda: random_expr(rng, depth - 1, names)  # noqa: E731
    if kind == "twist":
        return Twist(rng.randint(1, 3), sub())
    if kind == "bracket":
        return Bracket(sub(), sub())
    if kind == "triple":
        return Triple(sub(), sub(), sub())
    if kind == "scaled":
        return Scaled(random_scalar(rng, nonzero=True), sub())
    if kind == "koszul":
        return KoszulSign(_random_degpoly(rng, names), sub())
    if rng.random() < 0.2:
        return Sum(((1, Zero()), (-1, sub())))
    terms = [(1, sub())] + [(rng.choice((1, -1)), sub()) for _ in range(rng.randint(1, 3))]
    return Sum(tuple(terms))


def random_identity(rng: random.Random, depth: int = 4) -> Identity:
    """Random identity whose degree symbols all name quantified variables."""
    while True:
        ident = Identity(random_expr(rng, depth), random_expr(rng, depth))
        if ident.degree_symbols() <= set(ident.variables()):
            return ident
