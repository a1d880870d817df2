"""Exact graded linear algebra over the rationals.

Everything an algebra is made of lives here: a :class:`Grading` of the basis,
vectors with exact :class:`~fractions.Fraction` coefficients, binary and
ternary structure-constant tensors, even linear maps, and the
:class:`SuperAlgebra` container tying them together.

All objects are immutable once built.
"""

from __future__ import annotations

from dataclasses import InitVar, dataclass, replace
from fractions import Fraction
from itertools import product
from typing import Callable, Iterable, Mapping, Sequence

from .errors import DimensionMismatch, GradingError, NonHomogeneous, NotEven
from .report import CheckReport, verdict

Scalar = Fraction

_ZERO = 0
_ONE = 1


def as_scalar(value) -> int | Fraction:
    """Coerce to an exact rational; floats are refused.

    Integral values come back as ``int`` (much faster than ``Fraction`` and
    equal to it under ``==`` and ``hash``), everything else as ``Fraction``.
    """
    t = type(value)
    if t is int:
        return value
    if t is Fraction:
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, (bool, float)):
        raise TypeError(f"refusing inexact scalar {value!r}")
    if isinstance(value, (int, str)):
        q = Fraction(value)
    else:
        # numbers.Rational duck-typing (e.g. gmpy2.mpq)
        try:
            q = Fraction(value.numerator, value.denominator)
        except AttributeError:
            raise TypeError(f"cannot interpret {value!r} as a rational scalar") from None
    return q.numerator if q.denominator == 1 else q


def format_scalar(x: Fraction) -> str:
    return str(x)


def sign(exponent: int) -> int:
    """(-1)**exponent."""
    return -1 if exponent & 1 else 1


@dataclass(frozen=True)
class Grading:
    """Z2-degrees of the basis vectors, with optional display labels."""

    degrees: tuple[int, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(int(d) for d in self.degrees))
        if not self.degrees:
            raise InvalidGrading("dimension must be positive")
        if any(d not in (0, 1) for d in self.degrees):
            raise InvalidGrading(f"degrees must be 0 or 1, got {self.degrees}")
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(str(s) for s in self.labels))
            if len(self.labels) != len(self.degrees):
                raise InvalidGrading("one label per basis vector required")
            if len(set(self.labels)) != len(self.labels):
                raise InvalidGrading("basis labels must be distinct")

    @property
    def dimension(self) -> int:
        return len(self.degrees)

    def __len__(self) -> int:
        return len(self.degrees)

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else f"e{i}"

    def index(self, label: str) -> int:
        names = self.labels or tuple(f"e{i}" for i in range(self.dimension))
        return names.index(label)

    def block(self, d: int) -> tuple[int, ...]:
        return tuple(i for i, di in enumerate(self.degrees) if di == d)

    def basis(self, i: int) -> "SuperVector":
        return SuperVector.basis(self.dimension, i)

    def zero(self) -> "SuperVector":
        return SuperVector.zero(self.dimension)

    def vector(self, **coeffs) -> "SuperVector":
        """Build a vector from label keywords, e.g. ``g.vector(j=1, k=3)``."""
        c = [_ZERO] * self.dimension
        for name, value in coeffs.items():
            c[self.index(name)] = as_scalar(value)
        return SuperVector(c)


class InvalidGrading(GradingError):
    pass


class SuperVector:
    """Immutable coefficient vector with exact rational entries."""

    __slots__ = ("coeffs", "_support")

    def __init__(self, coeffs: Iterable):
        c = tuple(as_scalar(x) for x in coeffs)
        object.__setattr__(self, "coeffs", c)
        object.__setattr__(self, "_support", None)

    def __setattr__(self, name, value):
        raise AttributeError("SuperVector is immutable")

    @classmethod
    def _raw(cls, coeffs: tuple) -> "SuperVector":
        v = object.__new__(cls)
        object.__setattr__(v, "coeffs", coeffs)
        object.__setattr__(v, "_support", None)
        return v

    @classmethod
    def zero(cls, dim: int) -> "SuperVector":
        return cls._raw((_ZERO,) * dim)

    @classmethod
    def basis(cls, dim: int, i: int) -> "SuperVector":
        if not 0 <= i < dim:
            raise IndexError(f"basis index {i} out of range for dimension {dim}")
        c = [_ZERO] * dim
        c[i] = _ONE
        return cls._raw(tuple(c))

    @property
    def support(self) -> tuple[tuple[int, Fraction], ...]:
        """Nonzero (index, coefficient) pairs."""
        s = self._support
        if s is None:
            s = tuple((i, x) for i, x in enumerate(self.coeffs) if x)
            object.__setattr__(self, "_support", s)
        return s

    @property
    def dimension(self) -> int:
        return len(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __bool__(self):
        return bool(self.support)

    def is_zero(self) -> bool:
        return not self.support

    def __eq__(self, other):
        if isinstance(other, SuperVector):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def _check(self, other: "SuperVector"):
        if len(other.coeffs) != len(self.coeffs):
            raise DimensionMismatch(f"{len(self.coeffs)} vs {len(other.coeffs)}")

    def __add__(self, other):
        if not isinstance(other, SuperVector):
            return NotImplemented
        self._check(other)
        if not other.support:
            return self
        if not self.support:
            return other
        return SuperVector._raw(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        if not isinstance(other, SuperVector):
            return NotImplemented
        self._check(other)
        if not other.support:
            return self
        return SuperVector._raw(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        if not self.support:
            return self
        return SuperVector._raw(tuple(-a for a in self.coeffs))

    def __mul__(self, scalar):
        if isinstance(scalar, SuperVector):
            return NotImplemented
        return self._scaled(as_scalar(scalar))

    def _scaled(self, s) -> "SuperVector":
        if s == 1 or not self.support:
            return self
        return SuperVector._raw(tuple(s * a for a in self.coeffs))

    __rmul__ = __mul__

    def add_scaled(self, scalar, other: "SuperVector") -> "SuperVector":
        """self + scalar * other, without an intermediate vector."""
        self._check(other)
        if not scalar or not other.support:
            return self
        if not self.support and scalar == 1:
            return other
        c = list(self.coeffs)
        for i, x in other.support:
            c[i] += scalar * x
        return SuperVector._raw(tuple(c))

    def render(self, grading: Grading | None = None) -> str:
        if not self.support:
            return "0"
        parts = []
        for i, x in self.support:
            name = grading.label(i) if grading else f"e{i}"
            if x == 1:
                term = name
            elif x == -1:
                term = f"-{name}"
            else:
                term = f"{x}*{name}" if x.denominator == 1 else f"({x})*{name}"
            parts.append(term)
        out = parts[0]
        for t in parts[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out

    def __repr__(self):
        return f"SuperVector([{', '.join(str(x) for x in self.coeffs)}])"


def degree_of(v: SuperVector, grading: Grading) -> int:
    """Degree of a homogeneous vector; the zero vector counts as even."""
    if len(v) != grading.dimension:
        raise DimensionMismatch(f"vector of length {len(v)} on a {grading.dimension}-dim grading")
    degs = {grading.degrees[i] for i, _ in v.support}
    if len(degs) > 1:
        raise NonHomogeneous(f"{v.render(grading)} mixes even and odd components")
    return degs.pop() if degs else 0


def _as_vector(value, dim: int) -> SuperVector:
    v = value if isinstance(value, SuperVector) else SuperVector(value)
    if len(v) != dim:
        raise DimensionMismatch(f"expected a vector of length {dim}, got {len(v)}")
    return v


class BinaryStructure:
    """Bilinear product given by ``e_i . e_j = sum_k c[i][j][k] e_k``."""

    __slots__ = ("dimension", "_table", "_sparse")

    def __init__(self, table: Sequence[Sequence]):
        dim = len(table)
        rows = []
        for row in table:
            if len(row) != dim:
                raise DimensionMismatch("binary table must be dim x dim")
            rows.append(tuple(_as_vector(v, dim) for v in row))
        self.dimension = dim
        self._table = tuple(rows)
        self._sparse = tuple(tuple(v.support for v in row) for row in rows)

    @classmethod
    def from_products(cls, dim: int, products: Mapping[tuple[int, int], object]) -> "BinaryStructure":
        """Sparse constructor: only the nonzero basis products are given."""
        z = SuperVector.zero(dim)
        table = [[z] * dim for _ in range(dim)]
        for (i, j), v in products.items():
            table[i][j] = _as_vector(v, dim)
        return cls(table)

    @classmethod
    def from_function(cls, dim: int, f: Callable[[int, int], SuperVector]) -> "BinaryStructure":
        return cls([[f(i, j) for j in range(dim)] for i in range(dim)])

    @classmethod
    def zero(cls, dim: int) -> "BinaryStructure":
        return cls.from_products(dim, {})

    def product(self, i: int, j: int) -> SuperVector:
        return self._table[i][j]

    @property
    def constants(self) -> tuple:
        return tuple(tuple(v.coeffs for v in row) for row in self._table)

    def items(self):
        """Yield ((i, j), image) for every nonzero basis product."""
        for i, row in enumerate(self._table):
            for j, v in enumerate(row):
                if v:
                    yield (i, j), v

    def is_zero(self) -> bool:
        return not any(True for _ in self.items())

    def map_values(self, f: Callable[[SuperVector], SuperVector]) -> "BinaryStructure":
        return BinaryStructure([[f(v) for v in row] for row in self._table])

    def __call__(self, x: SuperVector, y: SuperVector) -> SuperVector:
        d = self.dimension
        if len(x.coeffs) != d or len(y.coeffs) != d:
            raise DimensionMismatch(f"operands must have length {d}")
        xs, ys = x.support, y.support
        if len(xs) == 1 and len(ys) == 1:
            (i, a), (j, b) = xs[0], ys[0]
            return self._table[i][j]._scaled(a * b)
        acc = [_ZERO] * d
        sp = self._sparse
        for i, a in xs:
            row = sp[i]
            for j, b in ys:
                ab = a * b
                for k, c in row[j]:
                    acc[k] += ab * c
        return SuperVector._raw(tuple(acc))

    def __eq__(self, other):
        if isinstance(other, BinaryStructure):
            return self._table == other._table
        return NotImplemented

    def __hash__(self):
        return hash(self._table)

    def __repr__(self):
        return f"BinaryStructure(dim={self.dimension}, nonzero={sum(1 for _ in self.items())})"


class TernaryStructure:
    """Trilinear product ``{e_i, e_j, e_l} = sum_k t[i][j][l][k] e_k``."""

    __slots__ = ("dimension", "_table", "_sparse")

    def __init__(self, table: Sequence[Sequence[Sequence]]):
        dim = len(table)
        planes = []
        for plane in table:
            if len(plane) != dim or any(len(row) != dim for row in plane):
                raise DimensionMismatch("ternary table must be dim x dim x dim")
            planes.append(tuple(tuple(_as_vector(v, dim) for v in row) for row in plane))
        self.dimension = dim
        self._table = tuple(planes)
        self._sparse = tuple(tuple(tuple(v.support for v in row) for row in p) for p in planes)

    @classmethod
    def from_products(cls, dim: int, products: Mapping[tuple[int, int, int], object]) -> "TernaryStructure":
        z = SuperVector.zero(dim)
        table = [[[z] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j, l), v in products.items():
            table[i][j][l] = _as_vector(v, dim)
        return cls(table)

    @classmethod
    def from_function(cls, dim: int, f: Callable[[int, int, int], SuperVector]) -> "TernaryStructure":
        r = range(dim)
        return cls([[[f(i, j, l) for l in r] for j in r] for i in r])

    @classmethod
    def zero(cls, dim: int) -> "TernaryStructure":
        return cls.from_products(dim, {})

    def product(self, i: int, j: int, l: int) -> SuperVector:
        return self._table[i][j][l]

    @property
    def constants(self) -> tuple:
        return tuple(tuple(tuple(v.coeffs for v in row) for row in p) for p in self._table)

    def items(self):
        for i, plane in enumerate(self._table):
            for j, row in enumerate(plane):
                for l, v in enumerate(row):
                    if v:
                        yield (i, j, l), v

    def is_zero(self) -> bool:
        return not any(True for _ in self.items())

    def map_values(self, f: Callable[[SuperVector], SuperVector]) -> "TernaryStructure":
        return TernaryStructure([[[f(v) for v in row] for row in p] for p in self._table])

    def __call__(self, x: SuperVector, y: SuperVector, z: SuperVector) -> SuperVector:
        d = self.dimension
        if len(x.coeffs) != d or len(y.coeffs) != d or len(z.coeffs) != d:
            raise DimensionMismatch(f"operands must have length {d}")
        xs, ys, zs = x.support, y.support, z.support
        if len(xs) == 1 and len(ys) == 1 and len(zs) == 1:
            (i, a), (j, b), (l, c) = xs[0], ys[0], zs[0]
            return self._table[i][j][l]._scaled(a * b * c)
        acc = [_ZERO] * d
        sp = self._sparse
        for i, a in xs:
            plane = sp[i]
            for j, b in ys:
                row = plane[j]
                ab = a * b
                for l, c in zs:
                    abc = ab * c
                    for k, t in row[l]:
                        acc[k] += abc * t
        return SuperVector._raw(tuple(acc))

    def __eq__(self, other):
        if isinstance(other, TernaryStructure):
            return self._table == other._table
        return NotImplemented

    def __hash__(self):
        return hash(self._table)

    def __repr__(self):
        return f"TernaryStructure(dim={self.dimension}, nonzero={sum(1 for _ in self.items())})"


class GradedLinearMap:
    """Square matrix acting on coefficient vectors; column j is the image of e_j."""

    __slots__ = ("matrix", "_columns")

    def __init__(self, matrix: Sequence[Sequence]):
        rows = tuple(tuple(as_scalar(x) for x in row) for row in matrix)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise DimensionMismatch("linear map must be a nonempty square matrix")
        self.matrix = rows
        self._columns = tuple(
            SuperVector._raw(tuple(rows[r][c] for r in range(n))) for c in range(n)
        )

    @classmethod
    def identity(cls, dim: int) -> "GradedLinearMap":
        return cls([[int(r == c) for c in range(dim)] for r in range(dim)])

    @classmethod
    def from_images(cls, images: Sequence) -> "GradedLinearMap":
        """Build from the images of the basis vectors (one per column)."""
        n = len(images)
        cols = [_as_vector(v, n) for v in images]
        return cls([[cols[c][r] for c in range(n)] for r in range(n)])

    @classmethod
    def diagonal(cls, entries: Sequence) -> "GradedLinearMap":
        n = len(entries)
        return cls([[entries[r] if r == c else 0 for c in range(n)] for r in range(n)])

    @property
    def dimension(self) -> int:
        return len(self.matrix)

    def image(self, j: int) -> SuperVector:
        return self._columns[j]

    def is_identity(self) -> bool:
        n = self.dimension
        return all(self.matrix[r][c] == (r == c) for r in range(n) for c in range(n))

    def __call__(self, x: SuperVector) -> SuperVector:
        if len(x.coeffs) != len(self.matrix):
            raise DimensionMismatch(f"map of dimension {self.dimension} applied to length {len(x)}")
        xs = x.support
        if len(xs) == 1:
            j, a = xs[0]
            return self._columns[j]._scaled(a)
        acc = SuperVector.zero(self.dimension)
        for j, a in xs:
            acc = acc.add_scaled(a, self._columns[j])
        return acc

    def __matmul__(self, other: "GradedLinearMap") -> "GradedLinearMap":
        return compose(self, other)

    def __eq__(self, other):
        if isinstance(other, GradedLinearMap):
            return self.matrix == other.matrix
        return NotImplemented

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        rows = "; ".join(" ".join(str(x) for x in r) for r in self.matrix)
        return f"GradedLinearMap([{rows}])"


def eval_binary(s: BinaryStructure, x: SuperVector, y: SuperVector) -> SuperVector:
    return s(x, y)


def eval_ternary(s: TernaryStructure, x: SuperVector, y: SuperVector, z: SuperVector) -> SuperVector:
    return s(x, y, z)


def apply_map(m: GradedLinearMap, x: SuperVector) -> SuperVector:
    return m(x)


def compose(m1: GradedLinearMap, m2: GradedLinearMap) -> GradedLinearMap:
    """m1 after m2."""
    if m1.dimension != m2.dimension:
        raise DimensionMismatch(f"cannot compose maps of dimension {m1.dimension} and {m2.dimension}")
    return GradedLinearMap.from_images([m1(m2.image(j)) for j in range(m2.dimension)])


def map_power(m: GradedLinearMap, n: int) -> GradedLinearMap:
    if n < 0:
        raise ValueError("map_power needs a nonnegative exponent")
    result = GradedLinearMap.identity(m.dimension)
    base = m
    while n:
        if n & 1:
            result = compose(base, result)
        n >>= 1
        if n:
            base = compose(base, base)
    return result


def is_even(m: GradedLinearMap, grading: Grading) -> bool:
    if m.dimension != grading.dimension:
        raise DimensionMismatch("map and grading differ in dimension")
    deg = grading.degrees
    return all(
        not m.matrix[r][c] or deg[r] == deg[c]
        for r in range(m.dimension)
        for c in range(m.dimension)
    )


@dataclass(frozen=True)
class SuperAlgebra:
    """A superspace with optional binary and ternary products and a twist.

    ``twist=None`` stands for the identity map.  Grading compatibility of the
    products and evenness of the twist are enforced unless ``validate`` is
    false (which exists so that broken inputs can be built for negative tests).
    """

    grading: Grading
    binary: BinaryStructure | None = None
    ternary: TernaryStructure | None = None
    twist: GradedLinearMap | None = None
    name: str = ""
    validate: InitVar[bool] = True

    def __post_init__(self, validate):
        d = self.grading.dimension
        for part in (self.binary, self.ternary, self.twist):
            if part is not None and part.dimension != d:
                raise DimensionMismatch(
                    f"component of dimension {part.dimension} on a {d}-dimensional grading"
                )
        if validate:
            report = check_grading_compat(self)
            if not report.passed:
                raise GradingError("structure constants violate the grading:\n" + report.render())
            if self.twist is not None and not is_even(self.twist, self.grading):
                raise NotEven("twisting map is not even")

    @property
    def dimension(self) -> int:
        return self.grading.dimension

    @property
    def degrees(self) -> tuple[int, ...]:
        return self.grading.degrees

    @property
    def alpha(self) -> GradedLinearMap:
        return self.twist if self.twist is not None else GradedLinearMap.identity(self.dimension)

    def has_identity_twist(self) -> bool:
        return self.twist is None or self.twist.is_identity()

    def basis(self, i: int) -> SuperVector:
        return self.grading.basis(i)

    def vector(self, **coeffs) -> SuperVector:
        return self.grading.vector(**coeffs)

    def replace(self, **changes) -> "SuperAlgebra":
        return replace(self, **changes)

    def same_structure(self, other: "SuperAlgebra") -> bool:
        """Tensor-for-tensor equality, with absent twist equal to identity."""
        return (
            self.grading.degrees == other.grading.degrees
            and self.binary == other.binary
            and self.ternary == other.ternary
            and self.alpha == other.alpha
        )


def check_grading_compat(a: SuperAlgebra) -> CheckReport:
    """Report basis products whose image leaves the expected degree block.

    The residual is the offending part of the product.
    """
    deg = a.grading.degrees
    verdicts = []
    if a.binary is not None:
        fails = []
        for (i, j), v in a.binary.items():
            bad = _off_block(v, (deg[i] + deg[j]) & 1, deg)
            if bad is not None:
                fails.append(((i, j), bad))
        verdicts.append(verdict("GRADING-BIN", fails))
    if a.ternary is not None:
        fails = []
        for (i, j, l), v in a.ternary.items():
            bad = _off_block(v, (deg[i] + deg[j] + deg[l]) & 1, deg)
            if bad is not None:
                fails.append(((i, j, l), bad))
        verdicts.append(verdict("GRADING-TER", fails))
    return CheckReport("grading", tuple(verdicts), a.name, a.grading)


def _off_block(v: SuperVector, expected: int, deg) -> SuperVector | None:
    if all(deg[k] == expected for k, _ in v.support):
        return None
    return SuperVector._raw(tuple(x if deg[k] != expected else _ZERO for k, x in enumerate(v.coeffs)))


def check_multiplicative(a: SuperAlgebra) -> CheckReport:
    """alpha(x.y) == alpha(x).alpha(y) and the ternary analogue on basis tuples."""
    alpha = a.alpha
    n = a.dimension
    img = [alpha.image(i) for i in range(n)]
    verdicts = []
    if a.binary is not None:
        mul = a.binary
        fails = []
        for i, j in product(range(n), repeat=2):
            r = alpha(mul.product(i, j)) - mul(img[i], img[j])
            if r:
                fails.append(((i, j), r))
        verdicts.append(verdict("MULT-BIN", fails))
    if a.ternary is not None:
        tri = a.ternary
        fails = []
        for i, j, l in product(range(n), repeat=3):
            r = alpha(tri.product(i, j, l)) - tri(img[i], img[j], img[l])
            if r:
                fails.append(((i, j, l), r))
        verdicts.append(verdict("MULT-TER", fails))
    return CheckReport("multiplicative", tuple(verdicts), a.name, a.grading)
