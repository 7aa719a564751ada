"""Exact vectors and matrices over Q and Q(i).

Everything here is an immutable value; operations return fresh
objects.  Row reduction delegates the integer elimination loop to the
kernel backend and finishes the canonical form (leading ones) in field
arithmetic, so a given row space always produces the same bits.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Iterable, Optional, Sequence

from orthoql import scalars
from orthoql.errors import DimensionMismatch, SingularGram
from orthoql.kernel import rref_gauss
from orthoql.scalars import Field, GaussianRational, Scalar

__all__ = [
    "Vector",
    "Matrix",
    "inner",
    "norm_sq",
    "rref",
    "null_space",
    "solve",
    "gram_projection",
    "matrix_inverse",
    "det",
    "principal_minors_nonneg",
]


class Vector:
    __slots__ = ("field", "entries")

    def __init__(self, field: Field, entries: Iterable):
        self.field = field
        self.entries = tuple(field.coerce(e) for e in entries)

    @property
    def dim(self) -> int:
        return len(self.entries)

    @property
    def is_zero(self) -> bool:
        return all(scalars.is_zero(e) for e in self.entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __add__(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        _check_dims(self.dim, other.dim)
        return Vector(self.field, (a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        _check_dims(self.dim, other.dim)
        return Vector(self.field, (a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self):
        return Vector(self.field, (-a for a in self.entries))

    def scaled(self, k) -> "Vector":
        k = self.field.coerce(k)
        return Vector(self.field, (k * a for a in self.entries))

    def __rmul__(self, k):
        return self.scaled(k)

    def __eq__(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        return self.field is other.field and self.entries == other.entries

    def __hash__(self):
        return hash((self.field, self.entries))

    def __repr__(self):
        body = ", ".join(scalars.scalar_text(e) for e in self.entries)
        return f"Vector[{self.field.value}]({body})"


class Matrix:
    __slots__ = ("field", "nrows", "ncols", "entries")

    def __init__(self, field: Field, nrows: int, ncols: int, entries: Iterable):
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        self.entries = tuple(field.coerce(e) for e in entries)
        if len(self.entries) != nrows * ncols:
            raise DimensionMismatch(
                f"{nrows}x{ncols} matrix needs {nrows * ncols} entries, "
                f"got {len(self.entries)}"
            )

    # --- constructors ---------------------------------------------

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence]) -> "Matrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise DimensionMismatch("ragged rows")
        return cls(field, len(rows), ncols, [e for r in rows for e in r])

    @classmethod
    def from_cols(cls, field: Field, cols: Sequence[Sequence]) -> "Matrix":
        cols = [list(c) for c in cols]
        nrows = len(cols[0]) if cols else 0
        for c in cols:
            if len(c) != nrows:
                raise DimensionMismatch("ragged columns")
        return cls(
            field, nrows, len(cols), [cols[j][i] for i in range(nrows) for j in range(len(cols))]
        )

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        one, zero = field.one, field.zero
        return cls(field, n, n, [one if i == j else zero for i in range(n) for j in range(n)])

    @classmethod
    def zero(cls, field: Field, nrows: int, ncols: int) -> "Matrix":
        return cls(field, nrows, ncols, [field.zero] * (nrows * ncols))

    # --- access ----------------------------------------------------

    def entry(self, i: int, j: int) -> Scalar:
        return self.entries[i * self.ncols + j]

    def row(self, i: int) -> Vector:
        return Vector(self.field, self.entries[i * self.ncols : (i + 1) * self.ncols])

    def col(self, j: int) -> Vector:
        return Vector(self.field, (self.entries[i * self.ncols + j] for i in range(self.nrows)))

    def rows(self):
        return [self.row(i) for i in range(self.nrows)]

    @property
    def is_zero(self) -> bool:
        return all(scalars.is_zero(e) for e in self.entries)

    # --- arithmetic -------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        _check_shape(self, other)
        return Matrix(
            self.field,
            self.nrows,
            self.ncols,
            (a + b for a, b in zip(self.entries, other.entries)),
        )

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        _check_shape(self, other)
        return Matrix(
            self.field,
            self.nrows,
            self.ncols,
            (a - b for a, b in zip(self.entries, other.entries)),
        )

    def __neg__(self):
        return Matrix(self.field, self.nrows, self.ncols, (-a for a in self.entries))

    def scaled(self, k) -> "Matrix":
        k = self.field.coerce(k)
        return Matrix(self.field, self.nrows, self.ncols, (k * a for a in self.entries))

    def __matmul__(self, other):
        if isinstance(other, Vector):
            if other.dim != self.ncols:
                raise DimensionMismatch(
                    f"matrix has {self.ncols} columns, vector has dim {other.dim}"
                )
            return Vector(
                self.field,
                (
                    sum(
                        (self.entry(i, k) * other[k] for k in range(self.ncols)),
                        self.field.zero,
                    )
                    for i in range(self.nrows)
                ),
            )
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise DimensionMismatch(
                    f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}"
                )
            out = []
            for i in range(self.nrows):
                for j in range(other.ncols):
                    acc = self.field.zero
                    for k in range(self.ncols):
                        acc = acc + self.entry(i, k) * other.entry(k, j)
                    out.append(acc)
            return Matrix(self.field, self.nrows, other.ncols, out)
        return NotImplemented

    def transpose(self) -> "Matrix":
        return Matrix(
            self.field,
            self.ncols,
            self.nrows,
            (self.entry(i, j) for j in range(self.ncols) for i in range(self.nrows)),
        )

    def conj_transpose(self) -> "Matrix":
        return Matrix(
            self.field,
            self.ncols,
            self.nrows,
            (scalars.conj(self.entry(i, j)) for j in range(self.ncols) for i in range(self.nrows)),
        )

    def conj(self) -> "Matrix":
        return Matrix(self.field, self.nrows, self.ncols, (scalars.conj(e) for e in self.entries))

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.field is other.field
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.field, self.nrows, self.ncols, self.entries))

    def __repr__(self):
        body = "; ".join(
            ", ".join(scalars.scalar_text(self.entry(i, j)) for j in range(self.ncols))
            for i in range(self.nrows)
        )
        return f"Matrix[{self.field.value} {self.nrows}x{self.ncols}]({body})"


def _check_dims(a: int, b: int):
    if a != b:
        raise DimensionMismatch(f"dimension {a} vs {b}")


def _check_shape(a: Matrix, b: Matrix):
    if a.nrows != b.nrows or a.ncols != b.ncols:
        raise DimensionMismatch(
            f"shape {a.nrows}x{a.ncols} vs {b.nrows}x{b.ncols}"
        )


# --- inner product ----------------------------------------------------

def inner(x: Vector, y: Vector) -> Scalar:
    """Inner product, linear in the first argument: sum of x_i * conj(y_i)."""
    _check_dims(x.dim, y.dim)
    acc = x.field.zero
    for a, b in zip(x.entries, y.entries):
        acc = acc + a * scalars.conj(b)
    return acc


def norm_sq(x: Vector) -> Fraction:
    """Squared norm as a plain Fraction (always real, always >= 0)."""
    return sum((scalars.abs_sq(a) for a in x.entries), Fraction(0))


# --- row reduction ----------------------------------------------------

def _scalar_parts(s: Scalar) -> tuple[Fraction, Fraction]:
    if isinstance(s, GaussianRational):
        return s.re, s.im
    return s, Fraction(0)


def _integral_rows(m: Matrix) -> list[list[int]]:
    """Clear denominators per row.  Row scaling preserves the row space,
    and the canonical form is unique per row space, so scaling is safe."""
    data = []
    for i in range(m.nrows):
        parts = [_scalar_parts(m.entry(i, j)) for j in range(m.ncols)]
        mult = lcm(*(p.denominator for pair in parts for p in pair)) if parts else 1
        flat: list[int] = []
        for re, im in parts:
            flat.append(int(re * mult))
            flat.append(int(im * mult))
        data.append(flat)
    return data


def _pair_scalar(field: Field, re: int, im: int) -> Scalar:
    if field is Field.Q:
        # Real input rows stay real through integer elimination.
        return Fraction(re)
    return GaussianRational(re, im)


def rref(m: Matrix) -> tuple[Matrix, int, tuple[int, ...]]:
    """Reduced row-echelon form of ``m`` plus rank and pivot columns.

    The output is the unique canonical representative of the row space:
    leading entries are one, pivot columns are clear elsewhere, zero
    rows sit at the bottom.
    """
    if m.nrows == 0:
        return m, 0, ()
    data = _integral_rows(m)
    rows, pivots = rref_gauss(data, m.ncols)
    out: list[Scalar] = []
    for idx, row in enumerate(rows):
        if idx < len(pivots):
            c = pivots[idx]
            piv = _pair_scalar(m.field, row[2 * c], row[2 * c + 1])
            for j in range(m.ncols):
                out.append(_pair_scalar(m.field, row[2 * j], row[2 * j + 1]) / piv)
        else:
            out.extend([m.field.zero] * m.ncols)
    reduced = Matrix(m.field, m.nrows, m.ncols, out)
    return reduced, len(pivots), tuple(pivots)


def null_space(m: Matrix) -> Matrix:
    """Basis of {x : m @ x = 0}, one basis vector per column."""
    reduced, rank, pivots = rref(m)
    free = [j for j in range(m.ncols) if j not in pivots]
    cols = []
    for f in free:
        v = [m.field.zero] * m.ncols
        v[f] = m.field.one
        for i, c in enumerate(pivots):
            v[c] = -reduced.entry(i, f)
        cols.append(v)
    return Matrix.from_cols(m.field, cols) if cols else Matrix(m.field, m.ncols, 0, [])


def solve(m: Matrix, b: Vector) -> Optional[Vector]:
    """Canonical solution of m @ x = b (free variables 0), or None."""
    if m.nrows != b.dim:
        raise DimensionMismatch(f"matrix has {m.nrows} rows, vector has dim {b.dim}")
    aug_rows = []
    for i in range(m.nrows):
        aug_rows.append([m.entry(i, j) for j in range(m.ncols)] + [b[i]])
    aug = Matrix.from_rows(m.field, aug_rows) if aug_rows else Matrix(m.field, 0, m.ncols + 1, [])
    reduced, rank, pivots = rref(aug)
    if m.ncols in pivots:
        return None
    x = [m.field.zero] * m.ncols
    for i, c in enumerate(pivots):
        x[c] = reduced.entry(i, m.ncols)
    return Vector(m.field, x)


# --- projections and determinants -------------------------------------

def matrix_inverse(g: Matrix) -> Matrix:
    """Inverse of a square matrix; raises SingularGram when singular."""
    n = g.nrows
    if n != g.ncols:
        raise DimensionMismatch("inverse of a non-square matrix")
    aug_rows = []
    for i in range(n):
        row = [g.entry(i, j) for j in range(n)]
        row.extend(g.field.one if i == j else g.field.zero for j in range(n))
        aug_rows.append(row)
    aug = Matrix.from_rows(g.field, aug_rows) if n else Matrix(g.field, 0, 0, [])
    reduced, rank, pivots = rref(aug)
    if rank < n or any(p >= n for p in pivots):
        raise SingularGram("matrix is singular")
    return Matrix(
        g.field, n, n, (reduced.entry(i, n + j) for i in range(n) for j in range(n))
    )


def gram_projection(basis: Matrix) -> Matrix:
    """Orthogonal projector onto the column space of ``basis``.

    Columns must be independent; the result P satisfies P @ P = P,
    conj-transpose(P) = P and P @ b = b for every basis column b.
    """
    n = basis.nrows
    if basis.ncols == 0:
        return Matrix.zero(basis.field, n, n)
    bh = basis.conj_transpose()
    gram = bh @ basis
    inv = matrix_inverse(gram)
    return basis @ inv @ bh


def det(m: Matrix) -> Scalar:
    """Determinant by exact Gaussian elimination."""
    n = m.nrows
    if n != m.ncols:
        raise DimensionMismatch("determinant of a non-square matrix")
    rows = [[m.entry(i, j) for j in range(n)] for i in range(n)]
    sign = 1
    acc = m.field.one
    for c in range(n):
        p = next((k for k in range(c, n) if not scalars.is_zero(rows[k][c])), -1)
        if p < 0:
            return m.field.zero
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            sign = -sign
        piv = rows[c][c]
        acc = acc * piv
        for k in range(c + 1, n):
            factor = rows[k][c] / piv
            if scalars.is_zero(factor):
                continue
            rows[k] = [a - factor * b for a, b in zip(rows[k], rows[c])]
    return acc if sign > 0 else -acc


def principal_minors_nonneg(g: Matrix) -> bool:
    """Whether every principal minor of a Hermitian matrix is >= 0.

    For Hermitian matrices this is equivalent to positive
    semidefiniteness; minors are evaluated exactly.
    """
    n = g.nrows
    for size in range(1, n + 1):
        for idx in combinations(range(n), size):
            sub = Matrix(
                g.field, size, size, (g.entry(i, j) for i in idx for j in idx)
            )
            d = det(sub)
            re = scalars.real_part(d)
            if isinstance(d, GaussianRational) and d.im != 0:
                return False
            if re < 0:
                return False
    return True
