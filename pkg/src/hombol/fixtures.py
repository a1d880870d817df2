"""Built-in algebras and a mutation helper for negative testing.

Catalogue:

``example-3.1``          3-dim Bol superalgebra, degrees (0, 0, 1) on (i, j, k),
                         with ``[k, i] = -k`` so that the bracket is graded skew.
``example-3.1-printed``  the same table with ``[k, i] = +k`` as originally printed.
``example-4.1-star``     3-dim right alternative superalgebra, degrees (0, 1, 1).
``example-4.1-bol``      its supercommutator/Jordan-associator Bol superalgebra.
``example-4.1-beta``     the even map i -> a i, j -> j + b k, k -> a k (a != 0).
``example-4.1-hom-bol``  the twisted table written out in closed form in a, b.
``zero``                 all products zero on a given grading.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .core import (
    BinaryStructure,
    GradedLinearMap,
    Grading,
    SuperAlgebra,
    TernaryStructure,
    as_scalar,
)
from .errors import InvalidParam

IJK = ("i", "j", "k")
I, J, K = 0, 1, 2

FIXTURES = (
    "example-3.1-printed",
    "example-3.1",
    "example-4.1-star",
    "example-4.1-bol",
    "example-4.1-beta",
    "example-4.1-hom-bol",
    "zero",
)


def _vec(**c):
    v = [0, 0, 0]
    for name, x in c.items():
        v[IJK.index(name)] = x
    return v


def _example_31(printed: bool) -> SuperAlgebra:
    g = Grading((0, 0, 1), IJK)
    binary = BinaryStructure.from_products(3, {
        (I, J): _vec(j=1),
        (J, I): _vec(j=-1),
        (I, K): _vec(k=1),
        (K, I): _vec(k=1 if printed else -1),
        (K, K): _vec(j=1),
    })
    ternary = TernaryStructure.from_products(3, {
        (I, J, I): _vec(j=-1),
        (I, K, I): _vec(k=-1),
        (J, I, I): _vec(j=1),
        (K, I, I): _vec(k=1),
    })
    name = "example-3.1-printed" if printed else "example-3.1"
    return SuperAlgebra(g, binary, ternary, name=name)


def example_41_star() -> SuperAlgebra:
    g = Grading((0, 1, 1), IJK)
    binary = BinaryStructure.from_products(3, {
        (I, J): _vec(k=1),
        (J, I): _vec(k=1),
        (J, K): _vec(i=2),
        (K, J): _vec(i=4),
    })
    return SuperAlgebra(g, binary, name="example-4.1-star")


def _bol_41(a=1) -> tuple[BinaryStructure, TernaryStructure]:
    a = as_scalar(a)
    a2 = a * a
    binary = BinaryStructure.from_products(3, {
        (J, K): _vec(i=6 * a),
        (K, J): _vec(i=6 * a),
    })
    ternary = TernaryStructure.from_products(3, {
        (I, J, J): _vec(i=4 * a2),
        (J, I, J): _vec(i=-4 * a2),
        (J, J, I): _vec(i=-8 * a2),
        (J, J, K): _vec(k=-8 * a2),
        (J, K, J): _vec(k=4 * a2),
        (K, J, J): _vec(k=4 * a2),
    })
    return binary, ternary


def example_41_bol() -> SuperAlgebra:
    binary, ternary = _bol_41()
    return SuperAlgebra(Grading((0, 1, 1), IJK), binary, ternary, name="example-4.1-bol")


def _nonzero(a) -> Fraction:
    a = as_scalar(a)
    if a == 0:
        raise InvalidParam("a must be nonzero")
    return a


def example_41_beta(a=1, b=0) -> GradedLinearMap:
    a, b = _nonzero(a), as_scalar(b)
    return GradedLinearMap.from_images([_vec(i=a), _vec(j=1, k=b), _vec(k=a)])


def example_41_hom_bol(a=1, b=0) -> SuperAlgebra:
    beta = example_41_beta(a, b)
    binary, ternary = _bol_41(a)
    return SuperAlgebra(
        Grading((0, 1, 1), IJK), binary, ternary, twist=beta,
        name=f"example-4.1-hom-bol(a={as_scalar(a)},b={as_scalar(b)})",
    )


def zero_algebra(degrees=(0, 1, 1), dim=None) -> SuperAlgebra:
    if isinstance(degrees, str):
        degrees = [int(d) for d in degrees.replace(",", " ").split()]
    degrees = tuple(int(d) for d in degrees)
    if dim is not None and int(dim) != len(degrees):
        raise InvalidParam(f"dim={dim} does not match {len(degrees)} degrees")
    n = len(degrees)
    return SuperAlgebra(
        Grading(degrees), BinaryStructure.zero(n), TernaryStructure.zero(n),
        name=f"zero{n}",
    )


_BUILDERS = {
    "example-3.1-printed": lambda: _example_31(printed=True),
    "example-3.1": lambda: _example_31(printed=False),
    "example-4.1-star": example_41_star,
    "example-4.1-bol": example_41_bol,
    "example-4.1-beta": example_41_beta,
    "example-4.1-hom-bol": example_41_hom_bol,
    "zero": zero_algebra,
}


def fixture(name: str, **params):
    """Build a catalogue entry; ``example-4.1-beta`` returns a linear map."""
    try:
        build = _BUILDERS[name]
    except KeyError:
        raise InvalidParam(f"unknown fixture {name!r}; known: {', '.join(FIXTURES)}") from None
    try:
        return build(**params)
    except TypeError as exc:
        raise InvalidParam(f"bad parameters for {name}: {exc}") from None


# small rationals a mutation may write into a cell
_MUTATION_VALUES = sorted(
    {Fraction(p, q) for p in range(-5, 6) for q in (1, 2, 3)} - {Fraction(0)}
)


def mutation_cells(a: SuperAlgebra) -> list[tuple]:
    """Grading-compatible cells: ('bin', i, j, k) and ('ter', i, j, l, k)."""
    deg = a.degrees
    n = a.dimension
    cells = []
    if a.binary is not None:
        cells += [
            ("bin", i, j, k)
            for i in range(n) for j in range(n) for k in range(n)
            if deg[k] == (deg[i] + deg[j]) % 2
        ]
    if a.ternary is not None:
        cells += [
            ("ter", i, j, l, k)
            for i in range(n) for j in range(n) for l in range(n) for k in range(n)
            if deg[k] == (deg[i] + deg[j] + deg[l]) % 2
        ]
    return cells


def mutate(a: SuperAlgebra, seed) -> SuperAlgebra:
    """Change exactly one grading-compatible structure constant.

    Deterministic in ``seed``.  The new value is a small rational different
    from the old one.
    """
    cells = mutation_cells(a)
    if not cells:
        raise InvalidParam("algebra has no structure constants to mutate")
    rng = random.Random(f"mutate:{seed}")
    cell = rng.choice(cells)
    kind, *idx = cell
    k = idx[-1]
    if kind == "bin":
        old = a.binary.product(*idx[:-1])
    else:
        old = a.ternary.product(*idx[:-1])
    value = rng.choice([x for x in _MUTATION_VALUES if x != old[k]])
    coeffs = list(old.coeffs)
    coeffs[k] = value
    new = type(old)(coeffs)

    if kind == "bin":
        i, j = idx[:-1]
        changes = {"binary": a.binary.__class__.from_function(
            a.dimension, lambda p, q: new if (p, q) == (i, j) else a.binary.product(p, q))}
    else:
        i, j, l = idx[:-1]
        changes = {"ternary": a.ternary.__class__.from_function(
            a.dimension,
            lambda p, q, r: new if (p, q, r) == (i, j, l) else a.ternary.product(p, q, r))}
    return a.replace(name=f"{a.name}~{seed}", **changes)
