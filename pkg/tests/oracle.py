"""Independent brute-force reference for the test-suite.

Vectors are plain dicts {basis index: Fraction}; products are dicts keyed by
basis tuples.  Nothing here imports the library's arithmetic, so agreement
with the library is evidence rather than tautology.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product


def vec(**kw):
    names = "ijk"
    return {names.index(k): Fraction(v) for k, v in kw.items() if v}


def lin(*terms):
    """sum of coeff * vector."""
    out: dict = {}
    for c, v in terms:
        for k, x in v.items():
            out[k] = out.get(k, Fraction(0)) + Fraction(c) * x
    return {k: x for k, x in out.items() if x}


def e(i):
    return {i: Fraction(1)}


def s(n):
    return -1 if n % 2 else 1


@dataclass
class OAlg:
    deg: tuple
    B: dict | None = None      # (i, j) -> vec
    T: dict | None = None      # (i, j, l) -> vec
    A: list | None = None      # column images: A[j] = alpha(e_j)

    @property
    def n(self):
        return len(self.deg)

    def br(self, x, y):
        return lin(*((a * b, self.B.get((i, j), {})) for i, a in x.items() for j, b in y.items()))

    def tr(self, x, y, z):
        return lin(*(
            (a * b * c, self.T.get((i, j, l), {}))
            for i, a in x.items() for j, b in y.items() for l, c in z.items()
        ))

    def al(self, x, times=1):
        for _ in range(times):
            if self.A is not None:
                x = lin(*((a, self.A[j]) for j, a in x.items()))
        return x


def from_library(a) -> OAlg:
    """Copy structure constants out of a library algebra (reads coefficients only)."""
    n = a.dimension
    B = T = A = None
    if a.binary is not None:
        B = {(i, j): {k: Fraction(c) for k, c in enumerate(a.binary.product(i, j).coeffs) if c}
             for i in range(n) for j in range(n)}
    if a.ternary is not None:
        T = {(i, j, l): {k: Fraction(c) for k, c in enumerate(a.ternary.product(i, j, l).coeffs) if c}
             for i in range(n) for j in range(n) for l in range(n)}
    if a.twist is not None:
        A = [{r: Fraction(a.twist.matrix[r][c]) for r in range(n) if a.twist.matrix[r][c]} for c in range(n)]
    return OAlg(tuple(a.degrees), B, T, A)


# -- axioms written out from their defining formulas, residual = lhs - rhs

def sb1(o, x, y, dx, dy):
    return lin((1, o.br(x, y)), (s(dx * dy), o.br(y, x)))


def sb2(o, x, y, z, dx, dy, dz):
    return lin((1, o.tr(x, y, z)), (s(dx * dy), o.tr(y, x, z)))


def sb3(o, x, y, z, dx, dy, dz):
    return lin((1, o.tr(x, y, z)), (s(dx * (dy + dz)), o.tr(y, z, x)), (s(dz * (dx + dy)), o.tr(z, x, y)))


def shb6(o, x, y, u, v, dx, dy, du, dv, alpha_power=1):
    a = lambda w: o.al(w, alpha_power)  # noqa: E731
    a2 = lambda w: o.al(w, 2 * alpha_power)  # noqa: E731
    lhs = o.tr(a(x), a(y), o.br(u, v))
    rhs = lin(
        (1, o.br(o.tr(x, y, u), a2(v))),
        (s(du * (dx + dy)), o.br(a2(u), o.tr(x, y, v))),
        (s((dx + dy) * (du + dv)), o.tr(a(u), a(v), o.br(x, y))),
        (-s((dx + dy) * (du + dv)), o.br(o.br(a(u), a(v)), o.br(a(x), a(y)))),
    )
    return lin((1, lhs), (-1, rhs))


def shb7(o, x, y, u, v, w, dx, dy, du, dv, dw, alpha_power=1):
    a2 = lambda t: o.al(t, 2 * alpha_power)  # noqa: E731
    lhs = o.tr(a2(x), a2(y), o.tr(u, v, w))
    rhs = lin(
        (1, o.tr(o.tr(x, y, u), a2(v), a2(w))),
        (s(du * (dx + dy)), o.tr(a2(u), o.tr(x, y, v), a2(w))),
        (s((dx + dy) * (du + dv)), o.tr(a2(u), a2(v), o.tr(x, y, w))),
    )
    return lin((1, lhs), (-1, rhs))


def shb1(o, x, y, dx, dy):
    return lin((1, o.al(o.br(x, y))), (-1, o.br(o.al(x), o.al(y))))


def shb2(o, x, y, z, dx, dy, dz):
    return lin((1, o.al(o.tr(x, y, z))), (-1, o.tr(o.al(x), o.al(y), o.al(z))))


def _untwisted(o):
    return OAlg(o.deg, o.B, o.T, None)


def sb4(o, x, y, u, v, dx, dy, du, dv):
    return shb6(_untwisted(o), x, y, u, v, dx, dy, du, dv)


def sb5(o, x, y, u, v, w, dx, dy, du, dv, dw):
    return shb7(_untwisted(o), x, y, u, v, w, dx, dy, du, dv, dw)


def ralt21(o, x, y, z, dx, dy, dz):
    def assoc(p, q, r):
        return lin((1, o.br(o.br(p, q), o.al(r))), (-1, o.br(o.al(p), o.br(q, r))))
    return lin((1, assoc(x, y, z)), (s(dy * dz), assoc(x, z, y)))


def ralt22(o, x, y, z, dx, dy, dz):
    lhs = o.br(o.al(x), lin((1, o.br(y, z)), (s(dy * dz), o.br(z, y))))
    rhs = lin((1, o.br(o.br(x, y), o.al(z))), (s(dy * dz), o.br(o.br(x, z), o.al(y))))
    return lin((1, lhs), (-1, rhs))


AXIOMS = {
    "SB1": (2, sb1), "SB2": (3, sb2), "SB3": (3, sb3), "SB4": (4, sb4), "SB5": (5, sb5),
    "SHB1": (2, shb1), "SHB2": (3, shb2), "SHB3": (2, sb1), "SHB4": (3, sb2), "SHB5": (3, sb3),
    "SHB6": (4, shb6), "SHB7": (5, shb7),
    "RALT-2.1": (3, ralt21), "RALT-2.2": (3, ralt22),
}

SUITES = {
    "bol": ("SB1", "SB2", "SB3", "SB4", "SB5"),
    "hom-bol": ("SHB1", "SHB2", "SHB3", "SHB4", "SHB5", "SHB6", "SHB7"),
    "right-alt": ("RALT-2.1", "RALT-2.2"),
}


def failures(o: OAlg, axiom: str) -> dict:
    """{basis tuple: residual dict} for every failing basis tuple."""
    arity, f = AXIOMS[axiom]
    out = {}
    for idx in product(range(o.n), repeat=arity):
        r = f(o, *[e(i) for i in idx], *[o.deg[i] for i in idx])
        if r:
            out[idx] = r
    return out


def suite_failures(o: OAlg, suite: str) -> dict:
    return {ax: failures(o, ax) for ax in SUITES[suite]}


# -- constructions from their formulas

def circ(o, x, y, dx, dy, scale=1):
    return lin((scale, o.br(x, y)), (scale * s(dx * dy), o.br(y, x)))


def bol_tables(o: OAlg, scale=1, jordan_sign=-1):
    """Supercommutator bracket and (-1)^{x(y+z)} asJ(y,z,x) on basis triples."""
    n, d = o.n, o.deg
    B = {}
    for i, j in product(range(n), repeat=2):
        B[(i, j)] = lin((scale, o.br(e(i), e(j))), (-scale * s(d[i] * d[j]), o.br(e(j), e(i))))

    def c(x, y, dx, dy):
        return circ(o, x, y, dx, dy, scale)

    T = {}
    for i, j, l in product(range(n), repeat=3):
        y, z, x = e(j), e(l), e(i)
        dy, dz, dx = d[j], d[l], d[i]
        first = c(c(y, z, dy, dz), o.al(x), (dy + dz) % 2, dx)
        second = c(o.al(y), c(z, x, dz, dx), dy, (dz + dx) % 2)
        asj = lin((1, first), (jordan_sign, second))
        T[(i, j, l)] = lin((s(d[i] * (d[j] + d[l])), asj))
    return B, T


def clean(table: dict) -> dict:
    return {k: v for k, v in table.items() if v}


# -- Example tables typed in directly

EX41_STAR = {(0, 1): vec(k=1), (1, 0): vec(k=1), (1, 2): vec(i=2), (2, 1): vec(i=4)}
EX41_BOL_B = {(1, 2): vec(i=6), (2, 1): vec(i=6)}
EX41_BOL_T = {
    (0, 1, 1): vec(i=4), (1, 0, 1): vec(i=-4), (1, 1, 0): vec(i=-8),
    (1, 1, 2): vec(k=-8), (1, 2, 1): vec(k=4), (2, 1, 1): vec(k=4),
}
EX31_B = {(0, 1): vec(j=1), (1, 0): vec(j=-1), (0, 2): vec(k=1), (2, 0): vec(k=-1), (2, 2): vec(j=1)}
EX31_T = {(0, 1, 0): vec(j=-1), (0, 2, 0): vec(k=-1), (1, 0, 0): vec(j=1), (2, 0, 0): vec(k=1)}


def ex41_twisted(a, b):
    """Yau twist of the Example 4.1 Bol table by i->ai, j->j+bk, k->ak, by hand."""
    a, b = Fraction(a), Fraction(b)
    beta = [vec(i=a), lin((1, vec(j=1)), (b, vec(k=1))), vec(k=a)]
    o = OAlg((0, 1, 1), None, None, beta)
    B = {key: o.al(v) for key, v in EX41_BOL_B.items()}
    T = {key: o.al(v, 2) for key, v in EX41_BOL_T.items()}
    return clean(B), clean(T), beta
