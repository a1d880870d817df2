"""JSON serialisation of algebras, morphisms and reports.

Rationals are written as strings (``"3"``, ``"-1/2"``) so nothing passes
through floating point.  Products are stored sparsely: only nonzero basis
products appear, each as ``{"args": [i, j], "value": {"k": "c", ...}}``.
The twist ``alpha`` is a dense row-major list; when absent the twist is the
identity.

:func:`dumps_algebra` produces a canonical layout, so ``dumps(loads(text))``
reproduces canonically formatted input byte for byte.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path

from .core import (
    BinaryStructure,
    GradedLinearMap,
    Grading,
    SuperAlgebra,
    SuperVector,
    TernaryStructure,
    is_even,
)
from .errors import AlgebraError
from .report import CheckReport

RATIONAL = re.compile(r"^-?[0-9]+(/[1-9][0-9]*)?$")

_ALGEBRA_KEYS = ("name", "dimension", "degrees", "basis_labels", "binary", "ternary", "alpha")
_MORPHISM_KEYS = ("name", "dimension", "degrees", "matrix")


class FormatError(AlgebraError, ValueError):
    pass


def parse_rational(text) -> Fraction:
    if not isinstance(text, str) or not RATIONAL.match(text):
        raise FormatError(f"not a rational string: {text!r}")
    return Fraction(text)


def _int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise FormatError(f"{what} must be an integer, got {value!r}")
    return value


def _grading(data: dict) -> Grading:
    dim = _int(data.get("dimension"), "dimension")
    degrees = data.get("degrees")
    if not isinstance(degrees, list) or len(degrees) != dim:
        raise FormatError("degrees must be a list with one entry per basis vector")
    for d in degrees:
        if _int(d, "degree") not in (0, 1):
            raise FormatError(f"degree must be 0 or 1, got {d!r}")
    labels = data.get("basis_labels")
    if labels is not None:
        if not isinstance(labels, list) or not all(isinstance(s, str) for s in labels):
            raise FormatError("basis_labels must be a list of strings")
    try:
        return Grading(tuple(degrees), tuple(labels) if labels is not None else None)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def _products(entries, dim: int, arity: int, what: str) -> dict:
    if not isinstance(entries, list):
        raise FormatError(f"{what} must be a list")
    out = {}
    for entry in entries:
        if not isinstance(entry, dict) or set(entry) != {"args", "value"}:
            raise FormatError(f"each {what} entry needs exactly 'args' and 'value'")
        args = entry["args"]
        if not isinstance(args, list) or len(args) != arity:
            raise FormatError(f"{what} args must list {arity} basis indices")
        for i in args:
            if not 0 <= _int(i, "basis index") < dim:
                raise FormatError(f"basis index {i} out of range")
        key = tuple(args)
        if key in out:
            raise FormatError(f"duplicate {what} entry for {args}")
        value = entry["value"]
        if not isinstance(value, dict):
            raise FormatError(f"{what} value must map basis indices to rationals")
        coeffs = [Fraction(0)] * dim
        for k, c in value.items():
            if not re.fullmatch(r"[0-9]+", k) or int(k) >= dim:
                raise FormatError(f"bad basis index {k!r} in {what} value")
            coeffs[int(k)] = parse_rational(c)
        out[key] = SuperVector(coeffs)
    return out


def _matrix(flat, dim: int, what: str) -> GradedLinearMap:
    if isinstance(flat, list) and len(flat) == dim and all(isinstance(r, list) for r in flat):
        flat = [x for row in flat for x in row]
    if not isinstance(flat, list) or len(flat) != dim * dim:
        raise FormatError(f"{what} must hold {dim * dim} rational strings in row-major order")
    vals = [parse_rational(x) for x in flat]
    return GradedLinearMap([vals[r * dim:(r + 1) * dim] for r in range(dim)])


def algebra_from_dict(data: dict) -> SuperAlgebra:
    if not isinstance(data, dict):
        raise FormatError("algebra file must hold a JSON object")
    unknown = set(data) - set(_ALGEBRA_KEYS)
    if unknown:
        raise FormatError(f"unknown keys: {', '.join(sorted(unknown))}")
    g = _grading(data)
    dim = g.dimension
    binary = ternary = alpha = None
    if "binary" in data:
        binary = BinaryStructure.from_products(dim, _products(data["binary"], dim, 2, "binary"))
    if "ternary" in data:
        ternary = TernaryStructure.from_products(dim, _products(data["ternary"], dim, 3, "ternary"))
    if "alpha" in data:
        alpha = _matrix(data["alpha"], dim, "alpha")
    name = data.get("name", "")
    if not isinstance(name, str):
        raise FormatError("name must be a string")
    try:
        return SuperAlgebra(g, binary, ternary, alpha, name=name)
    except AlgebraError as exc:
        raise FormatError(str(exc)) from None


def morphism_from_dict(data: dict) -> GradedLinearMap:
    if not isinstance(data, dict):
        raise FormatError("morphism file must hold a JSON object")
    unknown = set(data) - set(_MORPHISM_KEYS)
    if unknown:
        raise FormatError(f"unknown keys: {', '.join(sorted(unknown))}")
    dim = _int(data.get("dimension"), "dimension")
    if "matrix" not in data:
        raise FormatError("morphism file needs 'matrix'")
    m = _matrix(data["matrix"], dim, "matrix")
    if "degrees" in data:
        g = _grading(data)
        if not is_even(m, g):
            raise FormatError("morphism matrix is not even for the stated degrees")
    return m


def _vector_json(v: SuperVector) -> dict:
    return {str(k): str(c) for k, c in v.support}


def algebra_to_dict(a: SuperAlgebra) -> dict:
    g = a.grading
    out: dict = {"name": a.name, "dimension": g.dimension, "degrees": list(g.degrees)}
    if g.labels is not None:
        out["basis_labels"] = list(g.labels)
    if a.binary is not None:
        out["binary"] = [{"args": list(k), "value": _vector_json(v)} for k, v in a.binary.items()]
    if a.ternary is not None:
        out["ternary"] = [{"args": list(k), "value": _vector_json(v)} for k, v in a.ternary.items()]
    if a.twist is not None:
        out["alpha"] = [str(x) for row in a.twist.matrix for x in row]
    return out


def morphism_to_dict(m: GradedLinearMap, name: str = "", grading: Grading | None = None) -> dict:
    out: dict = {"name": name, "dimension": m.dimension}
    if grading is not None:
        out["degrees"] = list(grading.degrees)
    out["matrix"] = [str(x) for row in m.matrix for x in row]
    return out


def _compact(value) -> str:
    return json.dumps(value, ensure_ascii=False, separators=(", ", ": "))


def canonical_json(data: dict) -> str:
    """Top-level keys one per line; list-valued keys one element per line."""
    lines = ["{"]
    items = list(data.items())
    for n, (key, value) in enumerate(items):
        comma = "," if n < len(items) - 1 else ""
        if isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"  {json.dumps(key)}: [")
            for m, entry in enumerate(value):
                lines.append(f"    {_compact(entry)}{',' if m < len(value) - 1 else ''}")
            lines.append(f"  ]{comma}")
        else:
            lines.append(f"  {json.dumps(key)}: {_compact(value)}{comma}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dumps_algebra(a: SuperAlgebra) -> str:
    return canonical_json(algebra_to_dict(a))


def loads_algebra(text: str) -> SuperAlgebra:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None
    return algebra_from_dict(data)


def dumps_morphism(m: GradedLinearMap, name: str = "", grading: Grading | None = None) -> str:
    return canonical_json(morphism_to_dict(m, name, grading))


def loads_morphism(text: str) -> GradedLinearMap:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None
    return morphism_from_dict(data)


def load_algebra(path) -> SuperAlgebra:
    return loads_algebra(Path(path).read_text(encoding="utf-8"))


def save_algebra(a: SuperAlgebra, path) -> None:
    Path(path).write_text(dumps_algebra(a), encoding="utf-8")


def load_morphism(path) -> GradedLinearMap:
    return loads_morphism(Path(path).read_text(encoding="utf-8"))


def save_morphism(m: GradedLinearMap, path, name: str = "", grading: Grading | None = None) -> None:
    Path(path).write_text(dumps_morphism(m, name, grading), encoding="utf-8")


def dumps_report(report: CheckReport) -> str:
    return json.dumps(report.to_dict(), indent=2) + "\n"
