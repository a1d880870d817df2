"""Constructions producing (Hom-)Bol superalgebras and (Hom-)Lie supertriple systems.

Hypotheses are verified eagerly: unless ``verify=False`` is passed, a
construction checks its input exhaustively and raises a
:class:`~hombol.errors.HypothesisError` subclass (carrying the failing report)
rather than producing an object that silently fails its axioms.
"""

from __future__ import annotations

from itertools import product

from .core import (
    GradedLinearMap,
    SuperAlgebra,
    SuperVector,
    TernaryStructure,
    check_multiplicative,
    compose,
    degree_of,
    is_even,
    map_power,
    sign,
)
from .errors import (
    DimensionMismatch,
    NotCommuting,
    NotEven,
    NotHomBol,
    NotMorphism,
    NotMultiplicative,
    NotRightAlternative,
    NotSupercommutative,
    UnexpectedTwist,
)
from .identities import (
    check_hom_bol_super,
    check_plus_supercommutative,
    check_right_hom_alternative,
)
from .products import MINUS, hom_jordan_associator, super_jordan, supercommutator
from .report import CheckReport, verdict


def _squared_twist(a: SuperAlgebra) -> GradedLinearMap | None:
    return None if a.twist is None else compose(a.twist, a.twist)


def _jordan_ternary(plus: SuperAlgebra, factor: int, jordan_sign) -> TernaryStructure:
    """``{x,y,z} = factor * (-1)^{|x|(|y|+|z|)} asJ(y, z, x)`` on basis triples."""
    deg = plus.degrees
    e = [plus.basis(i) for i in range(plus.dimension)]

    def entry(i, j, l):
        s = factor * sign(deg[i] * (deg[j] + deg[l]))
        return hom_jordan_associator(plus, e[j], e[l], e[i], jordan_sign) * s

    return TernaryStructure.from_function(plus.dimension, entry)


def bol_from_right_alternative(a: SuperAlgebra, scale=1, jordan_sign=MINUS,
                               verify: bool = True) -> SuperAlgebra:
    """Hom-Bol superalgebra on a multiplicative right Hom-alternative superalgebra.

    Bracket: the supercommutator.  Triple: ``(-1)^{|x|(|y|+|z|)} asJ(y, z, x)``
    with the Jordan associator taken in the plus algebra.  Twist: alpha squared
    (so an untwisted input gives a Bol superalgebra).
    """
    if verify:
        ralt = check_right_hom_alternative(a)
        if not ralt.passed:
            raise NotRightAlternative(f"{a.name or 'input'} is not right Hom-alternative", ralt)
        mult = check_multiplicative(a)
        if not mult.passed:
            raise NotMultiplicative(f"twist of {a.name or 'input'} is not multiplicative", mult)
    minus = supercommutator(a, scale)
    plus = super_jordan(a, scale)
    ternary = _jordan_ternary(plus, 1, jordan_sign)
    name = f"bol({a.name})" if a.name else ""
    return SuperAlgebra(a.grading, minus.binary, ternary, _squared_twist(a), name=name)


def lie_sts_from_jordan(plus: SuperAlgebra, jordan_sign=MINUS, verify: bool = True) -> SuperAlgebra:
    """``[x,y,z] = 2 (-1)^{|x|(|y|+|z|)} asJ(y, z, x)`` with twist alpha squared."""
    if verify:
        _require_supercommutative(plus)
    ternary = _jordan_ternary(plus, 2, jordan_sign)
    name = f"lsts({plus.name})" if plus.name else ""
    return SuperAlgebra(plus.grading, None, ternary, _squared_twist(plus), name=name)


def _require_supercommutative(plus: SuperAlgebra):
    rep = check_plus_supercommutative(plus)
    if not rep.passed:
        raise NotSupercommutative(f"{plus.name or 'input'} is not supercommutative", rep)


def jordan_triple(plus: SuperAlgebra, x: SuperVector, y: SuperVector, z: SuperVector,
                  verify: bool = True) -> SuperVector:
    """``(x o y) o a(z) + (-1)^{|x||y| + |z|(|x|+|y|)} (z o y) o a(x) - (-1)^{|x||y|} a(y) o (x o z)``.

    Arguments must be homogeneous.
    """
    if verify:
        _require_supercommutative(plus)
    g = plus.grading
    dx, dy, dz = degree_of(x, g), degree_of(y, g), degree_of(z, g)
    circ, al = plus.binary, plus.alpha
    out = circ(circ(x, y), al(z))
    out = out.add_scaled(sign(dx * dy + dz * (dx + dy)), circ(circ(z, y), al(x)))
    return out.add_scaled(-sign(dx * dy), circ(al(y), circ(x, z)))


def check_hom_morphism(f: GradedLinearMap, src: SuperAlgebra, dst: SuperAlgebra) -> CheckReport:
    """Product preservation on basis tuples plus ``f o alpha_src == alpha_dst o f``."""
    if f.dimension != src.dimension or src.dimension != dst.dimension:
        raise DimensionMismatch("morphism, source and target must share a dimension")
    if not (is_even(f, src.grading) and is_even(f, dst.grading)):
        raise NotEven("morphism is not even")
    n = src.dimension
    img = [f.image(i) for i in range(n)]
    verdicts = []
    if src.binary is not None and dst.binary is not None:
        fails = []
        for i, j in product(range(n), repeat=2):
            r = f(src.binary.product(i, j)) - dst.binary(img[i], img[j])
            if r:
                fails.append(((i, j), r))
        verdicts.append(verdict("MORPH-BIN", fails))
    if src.ternary is not None and dst.ternary is not None:
        fails = []
        for i, j, l in product(range(n), repeat=3):
            r = f(src.ternary.product(i, j, l)) - dst.ternary(img[i], img[j], img[l])
            if r:
                fails.append(((i, j, l), r))
        verdicts.append(verdict("MORPH-TER", fails))
    a_src, a_dst = src.alpha, dst.alpha
    fails = []
    for j in range(n):
        r = f(a_src.image(j)) - a_dst(img[j])
        if r:
            fails.append(((j,), r))
    verdicts.append(verdict("MORPH-TWIST", fails))
    return CheckReport("morphism", tuple(verdicts), f"{src.name} -> {dst.name}", src.grading)


def _require_self_morphism(beta: GradedLinearMap, a: SuperAlgebra, commuting: bool):
    if beta.dimension != a.dimension:
        raise DimensionMismatch("map and algebra differ in dimension")
    if not is_even(beta, a.grading):
        raise NotEven("twisting map is not even")
    rep = check_hom_morphism(beta, a, a)
    products = [v for v in rep.verdicts if v.axiom != "MORPH-TWIST"]
    if not all(v.passed for v in products):
        raise NotMorphism("map does not preserve the products", rep)
    if commuting and not rep["MORPH-TWIST"].passed:
        raise NotCommuting("map does not commute with the twist", rep)


def _post_compose(a: SuperAlgebra, bin_map, ter_map, twist, name) -> SuperAlgebra:
    binary = a.binary.map_values(bin_map) if a.binary is not None and bin_map else a.binary
    ternary = a.ternary.map_values(ter_map) if a.ternary is not None and ter_map else a.ternary
    return SuperAlgebra(a.grading, binary, ternary, twist, name=name)


def yau_twist_bts(a: SuperAlgebra, beta: GradedLinearMap, verify: bool = True) -> SuperAlgebra:
    """Twist a Bol superalgebra by an even self-morphism.

    ``[x,y]_b = b([x,y])``, ``{x,y,z}_b = b^2({x,y,z})``, twist ``b``.
    """
    if not a.has_identity_twist():
        raise UnexpectedTwist("Yau twisting starts from an untwisted algebra")
    if verify:
        _require_self_morphism(beta, a, commuting=False)
    elif not is_even(beta, a.grading):
        raise NotEven("twisting map is not even")
    beta2 = compose(beta, beta)
    return _post_compose(a, beta, beta2, beta, f"yau({a.name})" if a.name else "")


def yau_twist_binary(a: SuperAlgebra, beta: GradedLinearMap, verify: bool = True) -> SuperAlgebra:
    """``x *_b y = b(x * y)`` with twist ``b o alpha``."""
    if verify:
        if not is_even(beta, a.grading):
            raise NotEven("twisting map is not even")
        binary_only = SuperAlgebra(a.grading, a.binary, name=a.name)
        rep = check_hom_morphism(beta, binary_only, binary_only)
        if not rep["MORPH-BIN"].passed:
            raise NotMorphism("map does not preserve the binary product", rep)
    elif not is_even(beta, a.grading):
        raise NotEven("twisting map is not even")
    return _post_compose(a, beta, None, compose(beta, a.alpha), f"yau({a.name})" if a.name else "")


def beta_n_twist(a: SuperAlgebra, beta: GradedLinearMap, n: int, verify: bool = True) -> SuperAlgebra:
    """``[,]_n = b^n [,]``, ``{,,}_n = b^{2n} {,,}``, twist ``b^n o alpha``.

    ``beta`` must be an even self-morphism of the Hom-Bol superalgebra ``a``
    commuting with its twist.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if verify:
        rep = check_hom_bol_super(a)
        if not rep.passed:
            raise NotHomBol(f"{a.name or 'input'} is not a Hom-Bol superalgebra", rep)
        _require_self_morphism(beta, a, commuting=True)
    if n == 0:
        return a
    bn = map_power(beta, n)
    b2n = compose(bn, bn)
    return _post_compose(a, bn, b2n, compose(bn, a.alpha), f"{a.name}_beta^{n}" if a.name else "")


def nth_derived(a: SuperAlgebra, n: int) -> SuperAlgebra:
    """Products post-composed with alpha^(2^n - 1) and alpha^(2^(n+1) - 2); twist alpha^(2^n)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0 or a.twist is None:
        return a
    alpha = a.alpha
    bin_map = map_power(alpha, 2 ** n - 1)
    ter_map = map_power(alpha, 2 ** (n + 1) - 2)
    twist = map_power(alpha, 2 ** n)
    return _post_compose(a, bin_map, ter_map, twist, f"{a.name}^({n})" if a.name else "")
