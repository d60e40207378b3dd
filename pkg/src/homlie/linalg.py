"""
Exact dense linear algebra over the rationals.

Scalars are :class:`fractions.Fraction`, which keeps every value in lowest
terms with a positive denominator. Matrices are immutable and row-major.
Nothing in this module ever touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

Vector = tuple  # tuple[Fraction, ...]


class ShapeError(ValueError):
    """Operands have incompatible dimensions."""


class SingularMatrixError(ArithmeticError):
    """A matrix that must be invertible is not."""


def as_rational(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are rejected: they would silently smuggle rounding error in.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact scalar {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot interpret {value!r} as a rational")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` (integers, optional sign) exactly."""
    s = text.strip()
    num, sep, den = s.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"not a rational: {text!r}") from None
    if q == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(p, q)


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def vector(values: Iterable) -> Vector:
    return tuple(as_rational(v) for v in values)


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def unit_vector(n: int, i: int) -> Vector:
    v = [Fraction(0)] * n
    v[i] = Fraction(1)
    return tuple(v)


def vec_add(u: Vector, v: Vector) -> Vector:
    if len(u) != len(v):
        raise ShapeError(f"vector lengths {len(u)} and {len(v)} differ")
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Vector, v: Vector) -> Vector:
    if len(u) != len(v):
        raise ShapeError(f"vector lengths {len(u)} and {len(v)} differ")
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, v: Vector) -> Vector:
    return tuple(c * a for a in v)


def is_zero_vector(v: Vector) -> bool:
    return all(a == 0 for a in v)


class Matrix:
    """Immutable dense matrix of Fractions.

    >>> Matrix.from_rows([[1, 2], [3, 4]]) @ Matrix.from_rows([[0, 1], [1, 0]])
    Matrix([[2, 1], [4, 3]])
    """

    __slots__ = ("rows", "cols", "entries", "_hash")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        entries = tuple(as_rational(e) for e in entries)
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise ShapeError(
                f"{len(entries)} entries do not fill a {rows}x{cols} matrix")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    # -- construction ------------------------------------------------
    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ShapeError("ragged rows")
        return cls(len(rows), cols, [e for r in rows for e in r])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> "Matrix":
        columns = [list(c) for c in columns]
        if rows is None:
            if not columns:
                raise ShapeError("row count required for an empty column list")
            rows = len(columns[0])
        for c in columns:
            if len(c) != rows:
                raise ShapeError("ragged columns")
        return cls(rows, len(columns),
                   [columns[j][i] for i in range(rows) for j in range(len(columns))])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, [Fraction(0)] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, [Fraction(int(i == j)) for i in range(n) for j in range(n)])

    @classmethod
    def diagonal(cls, values: Sequence) -> "Matrix":
        n = len(values)
        vals = vector(values)
        return cls(n, n, [vals[i] if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def block_diagonal(cls, block: "Matrix", copies: int) -> "Matrix":
        r, c = block.rows, block.cols
        out = [Fraction(0)] * (r * copies * c * copies)
        width = c * copies
        for b in range(copies):
            for i in range(r):
                for j in range(c):
                    out[(b * r + i) * width + b * c + j] = block.entries[i * c + j]
        return cls(r * copies, width, out)

    # -- access ------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> Vector:
        return self.entries[j::self.cols] if self.rows else ()

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def columns(self) -> list[Vector]:
        return [self.col(j) for j in range(self.cols)]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix(len(rows), len(cols),
                      [self.entries[i * self.cols + j] for i in rows for j in cols])

    def with_entry(self, i: int, j: int, value) -> "Matrix":
        entries = list(self.entries)
        entries[i * self.cols + j] = as_rational(value)
        return Matrix(self.rows, self.cols, entries)

    @property
    def T(self) -> "Matrix":
        return Matrix(self.cols, self.rows,
                      [self.entries[i * self.cols + j]
                       for j in range(self.cols) for i in range(self.rows)])

    def is_zero(self) -> bool:
        return all(e == 0 for e in self.entries)

    def first_nonzero(self) -> tuple[int, int] | None:
        for idx, e in enumerate(self.entries):
            if e != 0:
                return divmod(idx, self.cols)
        return None

    # -- arithmetic --------------------------------------------------
    def _check_same_shape(self, other: "Matrix"):
        if self.shape != other.shape:
            raise ShapeError(f"shapes {self.shape} and {other.shape} differ")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(self.rows, self.cols,
                      [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(self.rows, self.cols,
                      [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, [-a for a in self.entries])

    def scale(self, c) -> "Matrix":
        c = as_rational(c)
        return Matrix(self.rows, self.cols, [c * a for a in self.entries])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return mat_mul(self, other)

    def apply(self, v: Sequence) -> Vector:
        """Matrix-vector product."""
        if len(v) != self.cols:
            raise ShapeError(f"vector of length {len(v)} for {self.rows}x{self.cols} matrix")
        c = self.cols
        e = self.entries
        return tuple(sum((e[i * c + j] * v[j] for j in range(c) if v[j]), Fraction(0))
                     for i in range(self.rows))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.rows, self.cols, self.entries))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self) -> str:
        body = ", ".join(
            "[" + ", ".join(format_rational(x) for x in self.row(i)) + "]"
            for i in range(self.rows))
        return f"Matrix([{body}])"


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a.cols != b.rows:
        raise ShapeError(f"cannot multiply {a.shape} by {b.shape}")
    n, inner, m = a.rows, a.cols, b.cols
    ae, be = a.entries, b.entries
    out = []
    for i in range(n):
        arow = ae[i * inner:(i + 1) * inner]
        acc = [Fraction(0)] * m
        for t, x in enumerate(arow):
            if x:
                brow = be[t * m:(t + 1) * m]
                for j in range(m):
                    y = brow[j]
                    if y:
                        acc[j] += x * y
        out.extend(acc)
    return Matrix(n, m, out)


def _rref(a: Matrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form with first-nonzero pivoting."""
    rows = a.to_rows()
    pivots = []
    r = 0
    for c in range(a.cols):
        p = next((i for i in range(r, a.rows) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(a.rows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == a.rows:
            break
    return rows, pivots


def rank(a: Matrix) -> int:
    return len(_rref(a)[1])


def kernel_basis(a: Matrix) -> Matrix:
    """Basis of the null space, one vector per column.

    >>> kernel_basis(Matrix.from_rows([[1, 1]]))
    Matrix([[-1], [1]])
    """
    rows, pivots = _rref(a)
    free = [c for c in range(a.cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * a.cols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -rows[r][f]
        basis.append(v)
    return Matrix.from_columns(basis, rows=a.cols)


def image_basis(a: Matrix) -> Matrix:
    """Linearly independent columns of ``a`` spanning its column space."""
    _, pivots = _rref(a)
    return a.submatrix(range(a.rows), pivots)


def mat_inverse(a: Matrix) -> Matrix:
    if not a.is_square:
        raise ShapeError(f"cannot invert a {a.rows}x{a.cols} matrix")
    n = a.rows
    aug = Matrix.from_rows([list(a.row(i)) + list(Matrix.identity(n).row(i))
                            for i in range(n)], cols=2 * n)
    rows, pivots = _rref(aug)
    if pivots[:n] != list(range(n)):
        raise SingularMatrixError("matrix is singular")
    return Matrix.from_rows([r[n:] for r in rows], cols=n)


def is_invertible(a: Matrix) -> bool:
    return a.is_square and rank(a) == a.rows


def det(a: Matrix) -> Fraction:
    if not a.is_square:
        raise ShapeError("determinant of a non-square matrix")
    rows = a.to_rows()
    n = a.rows
    result = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            result = -result
        piv = rows[c][c]
        result *= piv
        for i in range(c + 1, n):
            if rows[i][c] != 0:
                f = rows[i][c] / piv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return result


@lru_cache(maxsize=4096)
def mat_power(a: Matrix, e: int) -> Matrix:
    """``a**e`` for any signed integer ``e``; negative exponents go through the inverse.

    Results are memoised, since coboundary assembly asks for the same handful
    of powers of one matrix over and over.
    """
    if not a.is_square:
        raise ShapeError("power of a non-square matrix")
    if e < 0:
        return mat_power(mat_inverse(a), -e)
    if e == 0:
        return Matrix.identity(a.rows)
    if e == 1:
        return a
    half = mat_power(a, e // 2)
    sq = half @ half
    return sq @ a if e % 2 else sq


def solve(a: Matrix, b: Matrix) -> Matrix | None:
    """A particular solution ``x`` of ``a @ x == b``, or None when inconsistent."""
    if a.rows != b.rows:
        raise ShapeError(f"{a.rows} equations but right-hand side has {b.rows} rows")
    n = a.cols
    aug = Matrix.from_rows([list(a.row(i)) + list(b.row(i)) for i in range(a.rows)],
                           cols=n + b.cols)
    rows, pivots = _rref(aug)
    if any(p >= n for p in pivots):
        return None
    x = [[Fraction(0)] * b.cols for _ in range(n)]
    for r, p in enumerate(pivots):
        x[p] = rows[r][n:]
    return Matrix.from_rows(x, cols=b.cols)


def in_column_space(a: Matrix, v: Sequence) -> bool:
    return solve(a, Matrix(len(v), 1, v)) is not None
