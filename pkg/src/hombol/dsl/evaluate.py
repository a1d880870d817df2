"""Evaluate parsed identities on an algebra, binding variables to basis vectors."""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from itertools import product
from typing import Mapping, Sequence

from ..core import GradedLinearMap, SuperAlgebra, SuperVector, map_power, sign
from ..errors import MissingOperation
from ..report import CheckReport, verdict
from .ast import Bracket, Identity, KoszulSign, Scaled, Sum, Triple, Twist, Var, Zero, walk
from .parser import parse_identity_file

BUILTIN_FILES = ("right-alt", "bol", "hom-bol", "lsts", "hlsts")


@dataclass(frozen=True)
class DslCheckRequest:
    ast: Identity
    algebra: SuperAlgebra
    order: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if not self.order:
            object.__setattr__(self, "order", self.ast.variables())
        missing = set(self.ast.variables()) - set(self.order)
        if missing:
            raise ValueError(f"binding order lacks variables {sorted(missing)}")
        _require_operations(self.ast, self.algebra)


def _require_operations(ident: Identity, a: SuperAlgebra):
    for side in (ident.lhs, ident.rhs):
        for node in walk(side):
            if isinstance(node, Bracket) and a.binary is None:
                raise MissingOperation(f"{ident.name or 'identity'} uses [,] but the algebra has no binary product")
            if isinstance(node, Triple) and a.ternary is None:
                raise MissingOperation(f"{ident.name or 'identity'} uses {{,,}} but the algebra has no ternary product")


class _Evaluator:
    def __init__(self, a: SuperAlgebra):
        self.a = a
        self.zero = SuperVector.zero(a.dimension)
        self._powers: dict[int, GradedLinearMap] = {}

    def power(self, k: int) -> GradedLinearMap:
        if k not in self._powers:
            self._powers[k] = map_power(self.a.alpha, k)
        return self._powers[k]

    def run(self, e, env: Mapping[str, SuperVector], degs: Mapping[str, int]) -> SuperVector:
        if isinstance(e, Var):
            return env[e.name]
        if isinstance(e, Zero):
            return self.zero
        if isinstance(e, Bracket):
            return self.a.binary(self.run(e.left, env, degs), self.run(e.right, env, degs))
        if isinstance(e, Triple):
            return self.a.ternary(
                self.run(e.first, env, degs), self.run(e.second, env, degs), self.run(e.third, env, degs)
            )
        if isinstance(e, Twist):
            return self.power(e.power)(self.run(e.arg, env, degs))
        if isinstance(e, Scaled):
            return self.run(e.arg, env, degs) * e.coeff
        if isinstance(e, KoszulSign):
            exponent = sum(_mono(m, degs) for m in e.exponent)
            v = self.run(e.arg, env, degs)
            return -v if exponent & 1 else v
        if isinstance(e, Sum):
            acc = self.zero
            for s, t in e.terms:
                acc = acc.add_scaled(s, self.run(t, env, degs))
            return acc
        raise TypeError(f"not an expression node: {e!r}")


def _mono(names, degs) -> int:
    out = 1
    for v in names:
        out *= degs[v]
    return out


def evaluate_identity(req: DslCheckRequest, binding: Sequence[int] | Mapping[str, int]) -> SuperVector:
    """Exact LHS - RHS with each variable bound to a basis index."""
    if not isinstance(binding, Mapping):
        binding = dict(zip(req.order, binding))
    a = req.algebra
    env = {v: a.basis(i) for v, i in binding.items()}
    degs = {v: a.degrees[i] for v, i in binding.items()}
    ev = _Evaluator(a)
    return ev.run(req.ast.lhs, env, degs) - ev.run(req.ast.rhs, env, degs)


def check_identity(req: DslCheckRequest) -> CheckReport:
    """Quantify over every assignment of basis vectors to the variables."""
    a = req.algebra
    n = a.dimension
    ev = _Evaluator(a)
    basis = [a.basis(i) for i in range(n)]
    fails = []
    lhs, rhs = req.ast.lhs, req.ast.rhs
    for idx in product(range(n), repeat=len(req.order)):
        env = {v: basis[i] for v, i in zip(req.order, idx)}
        degs = {v: a.degrees[i] for v, i in zip(req.order, idx)}
        r = ev.run(lhs, env, degs) - ev.run(rhs, env, degs)
        if r:
            fails.append((idx, r))
    name = req.ast.name or "identity"
    return CheckReport(name, (verdict(name, fails),), a.name, a.grading)


def check_identities(identities: Sequence[Identity], a: SuperAlgebra, suite: str = "dsl") -> CheckReport:
    verdicts = []
    for ident in identities:
        verdicts.extend(check_identity(DslCheckRequest(ident, a)).verdicts)
    return CheckReport(suite, tuple(verdicts), a.name, a.grading)


def builtin_text(name: str) -> str:
    if name not in BUILTIN_FILES:
        raise ValueError(f"no built-in identity file {name!r}; choose from {BUILTIN_FILES}")
    return resources.files("hombol.data").joinpath(f"{name}.idl").read_text(encoding="utf-8")


def load_builtin(name: str) -> list[Identity]:
    return parse_identity_file(builtin_text(name))
