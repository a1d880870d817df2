"""Exhaustive verification of graded identities on basis tuples.

Each axiom is a residual function ``LHS - RHS`` taking homogeneous vectors
together with their degrees.  Because every axiom is multilinear in its
quantified variables and basis vectors are homogeneous, a zero residual on
all basis tuples proves the identity for all homogeneous arguments.

The residuals are also exposed through :func:`axiom_residual` so they can be
evaluated on arbitrary homogeneous combinations.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Sequence

from .core import GradedLinearMap, SuperAlgebra, SuperVector, compose, degree_of, sign
from .errors import MissingBinary, MissingTernary, NonzeroBinary, UnexpectedTwist
from .report import CheckReport, verdict


@dataclass(frozen=True)
class Ops:
    """Callables an axiom residual may use."""

    br: Callable | None
    tr: Callable | None
    al: Callable
    al2: Callable


Residual = Callable[[Ops, Sequence[SuperVector], Sequence[int]], SuperVector]


@dataclass(frozen=True)
class Axiom:
    id: str
    arity: int
    residual: Residual


# -- associator identities ---------------------------------------------------

def _assoc(o, x, y, z):
    return o.br(o.br(x, y), o.al(z)) - o.br(o.al(x), o.br(y, z))


def _ralt_21(o, v, d):
    x, y, z = v
    return _assoc(o, x, y, z).add_scaled(sign(d[1] * d[2]), _assoc(o, x, z, y))


def _ralt_22(o, v, d):
    x, y, z = v
    s = sign(d[1] * d[2])
    lhs = o.br(o.al(x), o.br(y, z).add_scaled(s, o.br(z, y)))
    rhs = o.br(o.br(x, y), o.al(z)).add_scaled(s, o.br(o.br(x, z), o.al(y)))
    return lhs - rhs


def _lalt(o, v, d):
    x, y, z = v
    return _assoc(o, x, y, z).add_scaled(sign(d[0] * d[1]), _assoc(o, y, x, z))


def _plus_supercomm(o, v, d):
    x, y = v
    return o.br(x, y).add_scaled(-sign(d[0] * d[1]), o.br(y, x))


# -- Bol superalgebra ----------------------------------------------------------

def _sb1(o, v, d):
    x, y = v
    return o.br(x, y).add_scaled(sign(d[0] * d[1]), o.br(y, x))


def _sb2(o, v, d):
    x, y, z = v
    return o.tr(x, y, z).add_scaled(sign(d[0] * d[1]), o.tr(y, x, z))


def _sb3(o, v, d):
    x, y, z = v
    dx, dy, dz = d
    return (
        o.tr(x, y, z)
        .add_scaled(sign(dx * (dy + dz)), o.tr(y, z, x))
        .add_scaled(sign(dz * (dx + dy)), o.tr(z, x, y))
    )


def _sb4(o, v, d):
    x, y, u, w = v
    dx, dy, du, dw = d
    br, tr = o.br, o.tr
    rhs = br(tr(x, y, u), w).add_scaled(sign(du * (dx + dy)), br(u, tr(x, y, w)))
    inner = tr(u, w, br(x, y)) - br(br(u, w), br(x, y))
    rhs = rhs.add_scaled(sign((dx + dy) * (du + dw)), inner)
    return tr(x, y, br(u, w)) - rhs


def _sb5(o, v, d):
    x, y, u, w, z = v
    dx, dy, du, dw, _ = d
    tr = o.tr
    rhs = (
        tr(tr(x, y, u), w, z)
        .add_scaled(sign(du * (dx + dy)), tr(u, tr(x, y, w), z))
        .add_scaled(sign((dx + dy) * (du + dw)), tr(u, w, tr(x, y, z)))
    )
    return tr(x, y, tr(u, w, z)) - rhs


# -- Hom-Bol superalgebra --------------------------------------------------------

def _shb1(o, v, d):
    x, y = v
    return o.al(o.br(x, y)) - o.br(o.al(x), o.al(y))


def _shb2(o, v, d):
    x, y, z = v
    return o.al(o.tr(x, y, z)) - o.tr(o.al(x), o.al(y), o.al(z))


def _shb6(o, v, d):
    x, y, u, w = v
    dx, dy, du, dw = d
    br, tr, al, al2 = o.br, o.tr, o.al, o.al2
    ax, ay, au, aw = al(x), al(y), al(u), al(w)
    rhs = br(tr(x, y, u), al2(w)).add_scaled(sign(du * (dx + dy)), br(al2(u), tr(x, y, w)))
    inner = tr(au, aw, br(x, y)) - br(br(au, aw), br(ax, ay))
    rhs = rhs.add_scaled(sign((dx + dy) * (du + dw)), inner)
    return tr(ax, ay, br(u, w)) - rhs


def _shb7(o, v, d):
    x, y, u, w, z = v
    dx, dy, du, dw, _ = d
    tr, al2 = o.tr, o.al2
    rhs = (
        tr(tr(x, y, u), al2(w), al2(z))
        .add_scaled(sign(du * (dx + dy)), tr(al2(u), tr(x, y, w), al2(z)))
        .add_scaled(sign((dx + dy) * (du + dw)), tr(al2(u), al2(w), tr(x, y, z)))
    )
    return tr(al2(x), al2(y), tr(u, w, z)) - rhs


AXIOMS: dict[str, Axiom] = {
    a.id: a
    for a in [
        Axiom("RALT-2.1", 3, _ralt_21),
        Axiom("RALT-2.2", 3, _ralt_22),
        Axiom("LALT", 3, _lalt),
        Axiom("PLUS-SUPERCOMM", 2, _plus_supercomm),
        Axiom("SB1", 2, _sb1),
        Axiom("SB2", 3, _sb2),
        Axiom("SB3", 3, _sb3),
        Axiom("SB4", 4, _sb4),
        Axiom("SB5", 5, _sb5),
        Axiom("SHB1", 2, _shb1),
        Axiom("SHB2", 3, _shb2),
        Axiom("SHB3", 2, _sb1),
        Axiom("SHB4", 3, _sb2),
        Axiom("SHB5", 3, _sb3),
        Axiom("SHB6", 4, _shb6),
        Axiom("SHB7", 5, _shb7),
        Axiom("LSTS-SB2", 3, _sb2),
        Axiom("LSTS-SB3", 3, _sb3),
        Axiom("LSTS-SB5", 5, _sb5),
        Axiom("HLSTS-SHB2", 3, _shb2),
        Axiom("HLSTS-SHB4", 3, _sb2),
        Axiom("HLSTS-SHB5", 3, _sb3),
        Axiom("HLSTS-SHB7", 5, _shb7),
    ]
}

SUITES: dict[str, tuple[str, ...]] = {
    "right-alt": ("RALT-2.1", "RALT-2.2"),
    "left-alt": ("LALT",),
    "alt": ("RALT-2.1", "LALT"),
    "bol": ("SB1", "SB2", "SB3", "SB4", "SB5"),
    "hom-bol": ("SHB1", "SHB2", "SHB3", "SHB4", "SHB5", "SHB6", "SHB7"),
    "lsts": ("LSTS-SB2", "LSTS-SB3", "LSTS-SB5"),
    "hlsts": ("HLSTS-SHB2", "HLSTS-SHB4", "HLSTS-SHB5", "HLSTS-SHB7"),
    "plus-supercomm": ("PLUS-SUPERCOMM",),
}


def ops_for(a: SuperAlgebra, axiom_id: str) -> Ops:
    """Operation bundle an axiom sees on ``a``.

    For the Hom-Lie supertriple axioms the stored twist plays the role of the
    squared twist, so both slots carry it.
    """
    alpha = a.alpha
    if axiom_id.startswith("HLSTS"):
        return Ops(a.binary, a.ternary, alpha, alpha)
    return Ops(a.binary, a.ternary, alpha, compose(alpha, alpha))


def axiom_residual(a: SuperAlgebra, axiom_id: str, vectors: Sequence[SuperVector]) -> SuperVector:
    """LHS - RHS of one axiom at homogeneous (not necessarily basis) vectors."""
    ax = AXIOMS[axiom_id]
    if len(vectors) != ax.arity:
        raise ValueError(f"{axiom_id} takes {ax.arity} arguments")
    degs = [degree_of(v, a.grading) for v in vectors]
    return ax.residual(ops_for(a, axiom_id), vectors, degs)


def _memoised(f: Callable | None) -> Callable | None:
    """Cache results by argument identity for the duration of one suite run.

    Sub-expressions such as ``{x,y,u}`` or ``a(w)`` recur across the basis
    tuples of one axiom; arguments are kept alive alongside the result so
    their ids cannot be recycled.
    """
    if f is None:
        return None
    cache: dict = {}

    def g(*args):
        key = tuple(map(id, args))
        hit = cache.get(key)
        if hit is None:
            hit = cache[key] = (args, f(*args))
        return hit[1]

    return g


def run_axioms(a: SuperAlgebra, suite: str, axiom_ids: Sequence[str]) -> CheckReport:
    n = a.dimension
    deg = a.degrees
    basis = [a.basis(i) for i in range(n)]
    verdicts = []
    for axiom_id in axiom_ids:
        ax = AXIOMS[axiom_id]
        o = ops_for(a, axiom_id)
        o = Ops(_memoised(o.br), _memoised(o.tr), _memoised(o.al), _memoised(o.al2))
        fails = []
        for idx in product(range(n), repeat=ax.arity):
            r = ax.residual(o, [basis[i] for i in idx], [deg[i] for i in idx])
            if r:
                fails.append((idx, r))
        verdicts.append(verdict(axiom_id, fails))
    return CheckReport(suite, tuple(verdicts), a.name, a.grading)


def _need_binary(a):
    if a.binary is None:
        raise MissingBinary(f"{a.name or 'algebra'} has no binary product")


def _need_ternary(a):
    if a.ternary is None:
        raise MissingTernary(f"{a.name or 'algebra'} has no ternary product")


def check_right_hom_alternative(a: SuperAlgebra, form: str = "both") -> CheckReport:
    """Right superalternativity in associator form, expanded form, or both.

    With ``form="both"`` the two forms must fail on exactly the same triples;
    anything else is an internal inconsistency and raises ``AssertionError``.
    """
    _need_binary(a)
    ids = {"eq21": ("RALT-2.1",), "eq22": ("RALT-2.2",), "both": ("RALT-2.1", "RALT-2.2")}[form]
    report = run_axioms(a, "right-alt", ids)
    if form == "both":
        f21, f22 = report["RALT-2.1"].failing_args, report["RALT-2.2"].failing_args
        if f21 != f22:
            raise AssertionError(f"associator and expanded forms disagree: {sorted(f21 ^ f22)}")
    return report


def check_left_hom_alternative(a: SuperAlgebra) -> CheckReport:
    _need_binary(a)
    return run_axioms(a, "left-alt", ("LALT",))


def check_hom_alternative(a: SuperAlgebra) -> CheckReport:
    _need_binary(a)
    return run_axioms(a, "alt", ("RALT-2.1", "LALT"))


def check_bol_super(a: SuperAlgebra) -> CheckReport:
    _need_binary(a)
    _need_ternary(a)
    if not a.has_identity_twist():
        raise UnexpectedTwist("Bol superalgebra check needs the identity twist; use check_hom_bol_super")
    return run_axioms(a, "bol", SUITES["bol"])


def check_hom_bol_super(a: SuperAlgebra) -> CheckReport:
    _need_binary(a)
    _need_ternary(a)
    return run_axioms(a, "hom-bol", SUITES["hom-bol"])


def _triple_system(a: SuperAlgebra):
    _need_ternary(a)
    if a.binary is not None and not a.binary.is_zero():
        raise NonzeroBinary("a supertriple system must have zero binary product")


def check_lie_supertriple(a: SuperAlgebra) -> CheckReport:
    _triple_system(a)
    return run_axioms(a, "lsts", SUITES["lsts"])


def check_hom_lie_supertriple(a: SuperAlgebra) -> CheckReport:
    """Hom-Lie supertriple system axioms with the stored twist as the twist."""
    _triple_system(a)
    return run_axioms(a, "hlsts", SUITES["hlsts"])


def check_plus_supercommutative(plus: SuperAlgebra) -> CheckReport:
    _need_binary(plus)
    return run_axioms(plus, "plus-supercomm", SUITES["plus-supercomm"])


CHECKERS = {
    "right-alt": check_right_hom_alternative,
    "left-alt": check_left_hom_alternative,
    "alt": check_hom_alternative,
    "bol": check_bol_super,
    "hom-bol": check_hom_bol_super,
    "lsts": check_lie_supertriple,
    "hlsts": check_hom_lie_supertriple,
    "plus-supercomm": check_plus_supercommutative,
}


def check_suite(a: SuperAlgebra, suite: str) -> CheckReport:
    try:
        return CHECKERS[suite](a)
    except KeyError:
        raise ValueError(f"unknown suite {suite!r}; choose from {sorted(CHECKERS)}") from None
