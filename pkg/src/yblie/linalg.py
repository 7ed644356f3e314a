"""Exact scalars and the dense linear-algebra kernel.

Matrices are immutable and backed by sympy's sparse ``DomainMatrix`` over one
of three exact fields: the rationals, the Gaussian rationals ``Q(i)``, or a
prime field ``F_p`` (``p`` odd). Every routine is exact; there is no tolerance
anywhere in this module.

Kernel and cokernel bases are derived from the reduced row echelon form, so
their output is canonical, i.e. identical on every run.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import sympy
from sympy import GF, QQ
from sympy.polys.domains import QQ_I
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from .errors import (
    FieldMismatch,
    NoCofactorization,
    NoFactorization,
    ParseError,
    ShapeError,
    Singular,
)

__all__ = [
    "Field",
    "RATIONALS",
    "GAUSSIAN_RATIONALS",
    "prime_field",
    "Matrix",
    "kron",
    "kernel_basis",
    "cokernel_projection",
    "solve_through_mono",
    "solve_through_epi",
    "invert",
    "rank",
]

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


@lru_cache(maxsize=None)
def _domain(kind: str, p: int | None):
    if kind == "rational":
        return QQ
    if kind == "gaussian":
        return QQ_I
    return GF(p, symmetric=False)


def _parse_rational(text: str) -> Fraction:
    if not _RATIONAL_RE.match(text):
        raise ParseError(f"not a rational scalar: {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {text!r}") from None


def _format_rational(q) -> str:
    num, den = int(q.numerator), int(q.denominator)
    return str(num) if den == 1 else f"{num}/{den}"


@dataclass(frozen=True)
class Field:
    """Descriptor of an exact field: ``rational``, ``gaussian`` or ``prime``."""

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind not in ("rational", "gaussian", "prime"):
            raise ValueError(f"unknown field kind {self.kind!r}")
        if self.kind == "prime":
            if self.p is None or self.p == 2 or not sympy.isprime(self.p):
                raise ValueError(f"prime field needs an odd prime, got {self.p!r}")
        elif self.p is not None:
            raise ValueError("only prime fields take a modulus")

    @property
    def domain(self):
        return _domain(self.kind, self.p)

    @property
    def zero(self):
        return self.domain.zero

    @property
    def one(self):
        return self.domain.one

    def __call__(self, value):
        """Coerce an int, Fraction, scalar string or field element."""
        K = self.domain
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, bool):
            raise TypeError("booleans are not scalars")
        if isinstance(value, int):
            return K(value)
        if isinstance(value, Fraction):
            if self.kind == "prime":
                return K(value.numerator) / K(value.denominator)
            q = QQ(value.numerator, value.denominator)
            return q if self.kind == "rational" else QQ_I(q, 0)
        if K.of_type(value):
            return value
        if self.kind == "gaussian" and QQ.of_type(value):
            return QQ_I(value, 0)
        raise FieldMismatch(f"cannot coerce {value!r} into {self}")

    def parse(self, text: str):
        text = text.strip().replace(" ", "")
        if self.kind == "rational":
            q = _parse_rational(text)
            return QQ(q.numerator, q.denominator)
        if self.kind == "prime":
            if not re.match(r"^[+-]?\d+$", text):
                raise ParseError(f"not a residue for F_{self.p}: {text!r}")
            return self.domain(int(text))
        if not text:
            raise ParseError("empty Gaussian rational")
        if text.endswith("i"):
            body = text[:-1]
            k = max(body.rfind("+"), body.rfind("-"))
            re_text, im_text = (body[:k], body[k:]) if k > 0 else ("", body)
            if im_text in ("", "+", "-"):
                im_text += "1"
        else:
            re_text, im_text = text, "0"
        re_part = _parse_rational(re_text) if re_text else Fraction(0)
        im_part = _parse_rational(im_text)
        return QQ_I(QQ(re_part.numerator, re_part.denominator),
                    QQ(im_part.numerator, im_part.denominator))

    def format(self, x) -> str:
        if self.kind == "rational":
            return _format_rational(x)
        if self.kind == "prime":
            return str(int(x) % self.p)
        re_s, im = _format_rational(x.x), x.y
        if im == 0:
            return re_s
        im_s = {1: "i", -1: "-i"}.get(im, _format_rational(im) + "i")
        if x.x == 0:
            return im_s
        return re_s + ("" if im_s.startswith("-") else "+") + im_s

    def sqrt_minus_one(self):
        """A square root of -1 in the field, or ``None`` if there is none."""
        if self.kind == "gaussian":
            return QQ_I(0, 1)
        if self.kind == "prime" and self.p % 4 == 1:
            return self.domain(min(sympy.sqrt_mod(-1, self.p, all_roots=True)))
        return None

    def descriptor(self) -> dict:
        if self.kind == "prime":
            return {"type": "prime", "p": self.p}
        return {"type": self.kind}

    @classmethod
    def from_descriptor(cls, data) -> "Field":
        if not isinstance(data, dict) or "type" not in data:
            raise ParseError("field descriptor must be an object with a 'type'", "field")
        try:
            return cls(data["type"], data.get("p"))
        except ValueError as exc:
            raise ParseError(str(exc), "field") from None

    def __str__(self):
        return {"rational": "Q", "gaussian": "Q(i)"}.get(self.kind, f"F_{self.p}")


RATIONALS = Field("rational")
GAUSSIAN_RATIONALS = Field("gaussian")


def prime_field(p: int) -> Field:
    return Field("prime", p)


class Matrix:
    """Immutable matrix over an exact :class:`Field`."""

    __slots__ = ("_dm", "_field")

    def __init__(self, dm: DomainMatrix, field: Field):
        self._dm = dm.to_sparse()
        self._field = field

    # construction

    @classmethod
    def from_rows(cls, rows, field: Field, cols: int | None = None) -> "Matrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        data = {}
        for i, row in enumerate(rows):
            if len(row) != cols:
                raise ShapeError(f"row {i} has {len(row)} entries, expected {cols}")
            entries = {j: field(v) for j, v in enumerate(row)}
            entries = {j: v for j, v in entries.items() if v}
            if entries:
                data[i] = entries
        return cls(DomainMatrix(data, (len(rows), cols), field.domain), field)

    @classmethod
    def from_entries(cls, entries, shape, field: Field) -> "Matrix":
        """Build from a mapping ``(i, j) -> value``; absent entries are zero."""
        r, c = shape
        data: dict = {}
        for (i, j), v in entries.items():
            if not (0 <= i < r and 0 <= j < c):
                raise ShapeError(f"entry ({i}, {j}) outside shape {shape}")
            v = field(v)
            if v:
                data.setdefault(i, {})[j] = v
        return cls(DomainMatrix(data, (r, c), field.domain), field)

    @classmethod
    def zeros(cls, rows: int, cols: int, field: Field) -> "Matrix":
        return cls(DomainMatrix({}, (rows, cols), field.domain), field)

    @classmethod
    def identity(cls, n: int, field: Field) -> "Matrix":
        one = field.one
        return cls(DomainMatrix({i: {i: one} for i in range(n)}, (n, n), field.domain), field)

    # inspection

    @property
    def field(self) -> Field:
        return self._field

    @property
    def dm(self) -> DomainMatrix:
        return self._dm

    @property
    def shape(self) -> tuple[int, int]:
        return self._dm.shape

    @property
    def rows(self) -> int:
        return self._dm.shape[0]

    @property
    def cols(self) -> int:
        return self._dm.shape[1]

    def __getitem__(self, key):
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(key)
        return self._dm.rep.get(i, {}).get(j, self._field.zero)

    def items(self):
        """Nonzero entries ``(i, j, value)`` in row-major order."""
        rep = self._dm.rep
        for i in sorted(rep):
            row = rep[i]
            for j in sorted(row):
                yield i, j, row[j]

    def to_rows(self) -> list[list]:
        grid = [[self._field.zero] * self.cols for _ in range(self.rows)]
        for i, j, v in self.items():
            grid[i][j] = v
        return grid

    def to_text(self) -> list[list[str]]:
        fmt = self._field.format
        return [[fmt(v) for v in row] for row in self.to_rows()]

    def is_zero(self) -> bool:
        return not self._dm.rep

    def column(self, j: int) -> "Matrix":
        return Matrix(self._dm.extract(list(range(self.rows)), [j]), self._field)

    def nonzero_columns(self) -> list[int]:
        return sorted({j for row in self._dm.rep.values() for j in row})

    # arithmetic

    def _check(self, other: "Matrix"):
        if not isinstance(other, Matrix):
            return NotImplemented
        if other._field != self._field:
            raise FieldMismatch(f"{self._field} vs {other._field}")
        return None

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self._check(other) is NotImplemented:
            return NotImplemented
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        return Matrix(self._dm.matmul(other._dm), self._field)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self._check(other) is NotImplemented:
            return NotImplemented
        if self.shape != other.shape:
            raise ShapeError(f"cannot add {self.shape} and {other.shape}")
        return Matrix(self._dm + other._dm, self._field)

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self._check(other) is NotImplemented:
            return NotImplemented
        if self.shape != other.shape:
            raise ShapeError(f"cannot subtract {other.shape} from {self.shape}")
        return Matrix(self._dm - other._dm, self._field)

    def __neg__(self) -> "Matrix":
        return Matrix(-self._dm, self._field)

    def scale(self, c) -> "Matrix":
        c = self._field(c)
        if not c:
            return Matrix.zeros(self.rows, self.cols, self._field)
        return Matrix(self._dm * c, self._field)

    @property
    def T(self) -> "Matrix":
        return Matrix(self._dm.transpose(), self._field)

    def hstack(self, *others: "Matrix") -> "Matrix":
        for o in others:
            self._check(o)
        return Matrix(self._dm.hstack(*(o._dm for o in others)), self._field)

    def first_difference(self, other: "Matrix"):
        """First differing entry ``(i, j, self[i,j], other[i,j])`` in row-major order."""
        if self.shape != other.shape:
            raise ShapeError(f"cannot compare {self.shape} with {other.shape}")
        diff = (self - other)._dm.rep
        if not diff:
            return None
        i = min(diff)
        j = min(diff[i])
        return i, j, self[i, j], other[i, j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self._field == other._field
            and self.shape == other.shape
            and not (self._dm - other._dm).rep
        )

    def __hash__(self):
        return hash((self._field, self.shape, tuple(self.items())))

    def __repr__(self):
        return f"Matrix({self.to_text()}, field={self._field})"


def kron(A: Matrix, B: Matrix) -> Matrix:
    """Kronecker product; entry ``(i*rB + k, j*cB + l)`` is ``A[i,j]*B[k,l]``."""
    if A.field != B.field:
        raise FieldMismatch(f"{A.field} vs {B.field}")
    (ra, ca), (rb, cb) = A.shape, B.shape
    brep = B.dm.rep
    data: dict = {}
    for i, arow in A.dm.rep.items():
        for k, brow in brep.items():
            row = {}
            for j, a in arow.items():
                base = j * cb
                for l, b in brow.items():
                    row[base + l] = a * b
            data[i * rb + k] = row
    return Matrix(DomainMatrix(data, (ra * rb, ca * cb), A.field.domain), A.field)


def _rref(A: Matrix):
    if A.rows == 0 or A.cols == 0:
        return A, ()
    R, pivots = A.dm.rref()
    return Matrix(R, A.field), tuple(pivots)


def rank(A: Matrix) -> int:
    return len(_rref(A)[1])


def kernel_basis(A: Matrix) -> Matrix:
    """Columns form the reduced-echelon basis of ``{v : A v = 0}``.

    One basis vector per free column ``f`` of the RREF: it has a 1 in
    position ``f``, zeros at the other free positions.
    """
    n = A.cols
    R, pivots = _rref(A)
    free = [j for j in range(n) if j not in set(pivots)]
    rep = R.dm.rep
    data: dict = {}
    for k, f in enumerate(free):
        data.setdefault(f, {})[k] = A.field.one
        for r, p in enumerate(pivots):
            v = rep.get(r, {}).get(f)
            if v:
                data.setdefault(p, {})[k] = -v
    return Matrix(DomainMatrix(data, (n, len(free)), A.field.domain), A.field)


def cokernel_projection(A: Matrix) -> Matrix:
    """Canonical surjection ``Q`` with ``Q A = 0`` onto ``coker A``.

    The rows of ``Q`` are indexed by the target coordinates that are not
    pivots of ``A`` under reduced column elimination; ``Q`` restricted to those
    coordinates is the identity.
    """
    return kernel_basis(A.T).T


def solve_through_mono(m: Matrix, f: Matrix) -> Matrix:
    """The unique ``g`` with ``m @ g == f``, for ``m`` of full column rank."""
    if m.rows != f.rows:
        raise ShapeError(f"mono has {m.rows} rows, map has {f.rows}")
    n = m.cols
    if rank(m) != n:
        raise ShapeError("solve_through_mono needs a matrix of full column rank")
    if n == 0:
        if not f.is_zero():
            raise NoFactorization(f"column {f.nonzero_columns()[0]} is not in the image (zero subobject)")
        return Matrix.zeros(0, f.cols, f.field)
    R, pivots = _rref(m.hstack(f))
    bad = [p for p in pivots if p >= n]
    if bad:
        raise NoFactorization(f"column {bad[0] - n} of the map leaves the image")
    rep = R.dm.rep
    data = {}
    for i in range(n):
        row = {j - n: v for j, v in rep.get(i, {}).items() if j >= n}
        if row:
            data[i] = row
    return Matrix(DomainMatrix(data, (n, f.cols), f.field.domain), f.field)


def solve_through_epi(e: Matrix, f: Matrix) -> Matrix:
    """The unique ``g`` with ``g @ e == f``, for ``e`` of full row rank.

    Raises :class:`NoCofactorization` carrying the first kernel vector of ``e``
    that ``f`` does not annihilate.
    """
    if e.cols != f.cols:
        raise ShapeError(f"epi has {e.cols} columns, map has {f.cols}")
    if rank(e) != e.rows:
        raise ShapeError("solve_through_epi needs a matrix of full row rank")
    K = kernel_basis(e)
    FK = f @ K
    if not FK.is_zero():
        j = FK.nonzero_columns()[0]
        raise NoCofactorization(
            f"map does not vanish on kernel vector {j} of the epimorphism",
            kernel_vector=K.column(j),
        )
    try:
        return solve_through_mono(e.T, f.T).T
    except NoFactorization as exc:  # pragma: no cover - excluded by the kernel test
        raise NoCofactorization(str(exc)) from exc


def invert(A: Matrix) -> Matrix:
    if A.rows != A.cols:
        raise ShapeError(f"cannot invert a {A.shape} matrix")
    if A.rows == 0:
        return A
    try:
        return Matrix(A.dm.inv(), A.field)
    except DMNonInvertibleMatrixError:
        raise Singular(f"matrix of rank {rank(A)} < {A.rows} is not invertible") from None
