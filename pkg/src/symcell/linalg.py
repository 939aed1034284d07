"""Dense exact linear algebra over a :class:`~symcell.field.Field`.

Everything here is Gauss-Jordan elimination with the first nonzero entry in
scan order as pivot; with exact arithmetic no pivoting strategy is needed.
Subspaces are stored by their reduced row echelon basis, so two subspaces are
equal exactly when their stored rows are.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionMismatch, Inconsistent, Singular
from .field import Field

__all__ = [
    "Matrix",
    "Subspace",
    "rref",
    "kernel",
    "solve",
    "invert",
    "rank",
    "subspace_from_rows",
    "subspace_contains",
    "subspace_leq",
    "subspace_equal",
    "subspace_sum",
]


@dataclass(frozen=True)
class Matrix:
    field: Field
    rows: tuple[tuple, ...]
    ncols: int

    @classmethod
    def from_rows(cls, field: Field, rows: Iterable[Sequence], ncols: int | None = None) -> Matrix:
        rows = tuple(tuple(field(x) for x in r) for r in rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols is required for a matrix without rows")
            ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise DimensionMismatch("ragged matrix rows")
        return cls(field, rows, ncols)

    @classmethod
    def identity(cls, field: Field, n: int) -> Matrix:
        one, zero = field.one, field.zero
        return cls(field, tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)), n)

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> Matrix:
        z = field.zero
        return cls(field, tuple((z,) * ncols for _ in range(nrows)), ncols)

    @classmethod
    def column(cls, field: Field, values: Sequence) -> Matrix:
        return cls.from_rows(field, [[v] for v in values], 1)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    @property
    def T(self) -> Matrix:
        cols = tuple(tuple(r[j] for r in self.rows) for j in range(self.ncols))
        return Matrix(self.field, cols, self.nrows)

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        zero = self.field.zero
        cols = other.T.rows
        out = []
        for r in self.rows:
            nz = [(k, a) for k, a in enumerate(r) if a]
            out.append(tuple(sum((a * c[k] for k, a in nz), zero) for c in cols))
        return Matrix(self.field, tuple(out), other.ncols)

    def apply(self, v: Sequence) -> tuple:
        """Return ``self @ v`` for a plain coefficient vector ``v``."""
        if len(v) != self.ncols:
            raise DimensionMismatch(f"vector of length {len(v)} for {self.shape} matrix")
        zero = self.field.zero
        nz = [(k, x) for k, x in enumerate(v) if x]
        return tuple(sum((r[k] * x for k, x in nz), zero) for r in self.rows)

    def __add__(self, other: Matrix) -> Matrix:
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot add {self.shape} and {other.shape}")
        return Matrix(self.field, tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)), self.ncols)

    def __sub__(self, other: Matrix) -> Matrix:
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot subtract {self.shape} and {other.shape}")
        return Matrix(self.field, tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)), self.ncols)

    def scale(self, c) -> Matrix:
        c = self.field(c)
        return Matrix(self.field, tuple(tuple(c * a for a in r) for r in self.rows), self.ncols)

    def is_zero(self) -> bool:
        return not any(a for r in self.rows for a in r)

    def stack(self, other: Matrix) -> Matrix:
        if self.ncols != other.ncols:
            raise DimensionMismatch("column counts differ")
        return Matrix(self.field, self.rows + other.rows, self.ncols)

    def __str__(self):
        fmt = self.field.format
        cells = [[fmt(a) for a in r] for r in self.rows]
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join("[" + " ".join(c.rjust(width) for c in r) + "]" for r in cells)


def _eliminate(rows: list[list], ncols: int, field: Field, augment: int = 0) -> list[int]:
    """In-place Gauss-Jordan on ``rows``; returns pivot columns.

    Only the first ``ncols - augment`` columns are eligible as pivots.
    """
    one = field.one
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols - augment):
        if r == nrows:
            break
        for i in range(r, nrows):
            if rows[i][c]:
                break
        else:
            continue
        rows[r], rows[i] = rows[i], rows[r]
        piv = rows[r][c]
        if piv != one:
            inv = one / piv
            rows[r] = [a * inv for a in rows[r]]
        prow = rows[r]
        nz = [k for k in range(c, ncols) if prow[k]]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    row = rows[i]
                    for k in nz:
                        row[k] = row[k] - f * prow[k]
        pivots.append(c)
        r += 1
    return pivots


def rref(m: Matrix) -> tuple[Matrix, int]:
    """Reduced row echelon form of ``m`` and its rank.

    The returned matrix has the same shape as ``m``; zero rows sit at the bottom.
    """
    rows = [list(r) for r in m.rows]
    pivots = _eliminate(rows, m.ncols, m.field)
    return Matrix(m.field, tuple(tuple(r) for r in rows), m.ncols), len(pivots)


def rank(m: Matrix) -> int:
    return rref(m)[1]


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of ``field ** ambient`` in canonical form.

    ``basis`` holds the nonzero rows of the reduced row echelon form, so the
    dataclass equality is subspace equality.
    """

    field: Field
    ambient: int
    basis: tuple[tuple, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(j for j, a in enumerate(r) if a) for r in self.basis)

    def as_matrix(self) -> Matrix:
        return Matrix(self.field, self.basis, self.ambient)

    def reduce(self, v: Sequence) -> list:
        """Remainder of ``v`` after clearing every pivot column of the basis."""
        v = [self.field(x) for x in v]
        if len(v) != self.ambient:
            raise DimensionMismatch(f"vector of length {len(v)} in ambient dimension {self.ambient}")
        for row, p in zip(self.basis, self.pivots):
            f = v[p]
            if f:
                v = [a - f * b for a, b in zip(v, row)]
        return v

    def __contains__(self, v) -> bool:
        return subspace_contains(self, v)

    def __le__(self, other: Subspace) -> bool:
        return subspace_leq(self, other)

    def __lt__(self, other: Subspace) -> bool:
        return subspace_leq(self, other) and self.dim < other.dim

    def __add__(self, other: Subspace) -> Subspace:
        return subspace_sum(self, other)

    def __str__(self):
        if not self.basis:
            return f"0 (ambient dimension {self.ambient})"
        return str(self.as_matrix())


def subspace_from_rows(rows: Matrix) -> Subspace:
    red, r = rref(rows)
    return Subspace(rows.field, rows.ncols, red.rows[:r])


def span(field: Field, vectors: Iterable[Sequence], ambient: int) -> Subspace:
    return subspace_from_rows(Matrix.from_rows(field, list(vectors), ambient))


def kernel(m: Matrix) -> Subspace:
    """Right null space ``{v : m v = 0}``."""
    red, r = rref(m)
    field, n = m.field, m.ncols
    pivots = [next(j for j, a in enumerate(row) if a) for row in red.rows[:r]]
    free = [j for j in range(n) if j not in set(pivots)]
    zero, one = field.zero, field.one
    vectors = []
    for f in free:
        v = [zero] * n
        v[f] = one
        for row, p in zip(red.rows, pivots):
            v[p] = -row[f]
        vectors.append(v)
    return span(field, vectors, n)


def solve(m: Matrix, b: Matrix) -> Matrix:
    """A solution ``x`` of ``m @ x == b`` (free variables set to zero)."""
    if m.nrows != b.nrows:
        raise DimensionMismatch(f"right-hand side has {b.nrows} rows, expected {m.nrows}")
    field = m.field
    width = m.ncols + b.ncols
    rows = [list(r) + list(s) for r, s in zip(m.rows, b.rows)]
    pivots = _eliminate(rows, width, field, augment=b.ncols)
    r = len(pivots)
    for row in rows[r:]:
        if any(row[m.ncols:]):
            raise Inconsistent("right-hand side is not in the column space")
    zero = field.zero
    x = [[zero] * b.ncols for _ in range(m.ncols)]
    for row, p in zip(rows, pivots):
        x[p] = row[m.ncols:]
    return Matrix(field, tuple(tuple(r) for r in x), b.ncols)


def invert(m: Matrix) -> Matrix:
    if m.nrows != m.ncols:
        raise DimensionMismatch(f"cannot invert a {m.shape} matrix")
    n = m.ncols
    try:
        return solve(m, Matrix.identity(m.field, n))
    except Inconsistent:
        raise Singular("matrix is singular") from None


def _check_ambient(s1: Subspace, s2: Subspace) -> None:
    if s1.ambient != s2.ambient or s1.field != s2.field:
        raise DimensionMismatch(
            f"subspaces of {s1.field.tag}^{s1.ambient} and {s2.field.tag}^{s2.ambient}"
        )


def subspace_contains(s: Subspace, v: Sequence) -> bool:
    return not any(s.reduce(v))


def subspace_leq(s1: Subspace, s2: Subspace) -> bool:
    _check_ambient(s1, s2)
    return all(subspace_contains(s2, row) for row in s1.basis)


def subspace_equal(s1: Subspace, s2: Subspace) -> bool:
    _check_ambient(s1, s2)
    return s1.basis == s2.basis


def subspace_sum(s1: Subspace, s2: Subspace) -> Subspace:
    _check_ambient(s1, s2)
    return span(s1.field, s1.basis + s2.basis, s1.ambient)
