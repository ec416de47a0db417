"""
Exact linear algebra over arbitrary-precision rationals.

Matrices are dense and immutable. Rank and determinant use fraction-free
(Bareiss) elimination on integer rows obtained by clearing denominators row
by row; kernels and solving use a rational reduced row echelon form, which
is only ever applied to the small matrices of the classical models and the
Levi modules.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from core.error_handler import (
    DimensionMismatchError,
    NonSquareMatrixError,
    NotNilpotentError,
    NotRationalError,
)

Vector = Tuple[Fraction, ...]


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class RationalMatrix:
    """Dense row-major matrix of exact rationals."""

    rows: int
    cols: int
    entries: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionMismatchError("negative matrix shape")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatchError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )

    # --- constructors ---

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: Optional[int] = None) -> "RationalMatrix":
        rows = list(rows)
        if cols is None:
            cols = len(rows[0]) if rows else 0
        flat: List[Fraction] = []
        for r in rows:
            if len(r) != cols:
                raise DimensionMismatchError("ragged rows")
            flat.extend(_frac(x) for x in r)
        return cls(len(rows), cols, tuple(flat))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: Optional[int] = None) -> "RationalMatrix":
        columns = list(columns)
        if rows is None:
            rows = len(columns[0]) if columns else 0
        return cls.from_rows(
            [[columns[j][i] for j in range(len(columns))] for i in range(rows)],
            cols=len(columns),
        )

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls.from_rows([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, values: Sequence) -> "RationalMatrix":
        n = len(values)
        return cls.from_rows([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def column(cls, values: Sequence) -> "RationalMatrix":
        return cls.from_rows([[v] for v in values], cols=1)

    # --- access ---

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, key: Tuple[int, int]) -> Fraction:
        i, j = key
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> List[List[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def columns(self) -> List[Vector]:
        return [self.col(j) for j in range(self.cols)]

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "RationalMatrix":
        return RationalMatrix.from_rows(
            [[self[i, j] for j in col_idx] for i in row_idx], cols=len(col_idx)
        )

    def is_zero(self) -> bool:
        return not any(self.entries)

    # --- arithmetic ---

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix.from_rows(
            [[self[i, j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    @property
    def T(self) -> "RationalMatrix":
        return self.transpose()

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._same_shape(other)
        return RationalMatrix(self.rows, self.cols,
                              tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._same_shape(other)
        return RationalMatrix(self.rows, self.cols,
                              tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "RationalMatrix":
        return RationalMatrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, c) -> "RationalMatrix":
        c = _frac(c)
        return RationalMatrix(self.rows, self.cols, tuple(c * a for a in self.entries))

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise DimensionMismatchError(
                f"cannot multiply {self.shape} by {other.shape}"
            )
        other_cols = other.columns()
        out: List[Fraction] = []
        for i in range(self.rows):
            r = self.row(i)
            nz = [(k, a) for k, a in enumerate(r) if a]
            for c in other_cols:
                out.append(sum((a * c[k] for k, a in nz), Fraction(0)))
        return RationalMatrix(self.rows, other.cols, tuple(out))

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise DimensionMismatchError("vector length does not match matrix")
        v = [_frac(x) for x in v]
        return tuple(
            sum((a * b for a, b in zip(self.row(i), v) if a), Fraction(0))
            for i in range(self.rows)
        )

    def hstack(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.rows != other.rows:
            raise DimensionMismatchError("hstack needs equal row counts")
        return RationalMatrix.from_rows(
            [list(self.row(i)) + list(other.row(i)) for i in range(self.rows)],
            cols=self.cols + other.cols,
        )

    def vstack(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.cols:
            raise DimensionMismatchError("vstack needs equal column counts")
        return RationalMatrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    def _same_shape(self, other: "RationalMatrix") -> None:
        if self.shape != other.shape:
            raise DimensionMismatchError(f"shape {self.shape} vs {other.shape}")


# --- fraction-free elimination ---

def _integer_rows(m: RationalMatrix) -> List[List[int]]:
    """Clears denominators row by row; row scaling does not change rank."""
    out = []
    for i in range(m.rows):
        r = m.row(i)
        den = 1
        for a in r:
            den = den * a.denominator // math.gcd(den, a.denominator)
        out.append([int(a * den) for a in r])
    return out


def _bareiss(rows: List[List[int]], ncols: int) -> Tuple[int, List[List[int]], int]:
    """
    In-place fraction-free row echelon form.

    Returns (rank, rows, swap_sign). Every entry after step k is a (k+1)-minor
    of the input, so the division by the previous pivot is exact.
    """
    nrows = len(rows)
    rank = 0
    prev = 1
    sign = 1
    for col in range(ncols):
        if rank == nrows:
            break
        pivot = None
        for r in range(rank, nrows):
            if rows[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        if pivot != rank:
            rows[rank], rows[pivot] = rows[pivot], rows[rank]
            sign = -sign
        p_row = rows[rank]
        p = p_row[col]
        for r in range(rank + 1, nrows):
            row_r = rows[r]
            a = row_r[col]
            if a:
                for c in range(col + 1, ncols):
                    row_r[c] = (p * row_r[c] - a * p_row[c]) // prev
            elif p != prev:
                for c in range(col + 1, ncols):
                    row_r[c] = (p * row_r[c]) // prev
            row_r[col] = 0
        prev = p
        rank += 1
    return rank, rows, sign


def rank(m: RationalMatrix) -> int:
    """Exact rank; the empty matrix has rank 0."""
    if m.rows == 0 or m.cols == 0:
        return 0
    # Eliminate along the shorter side.
    if m.rows > m.cols:
        m = m.transpose()
    r, _, _ = _bareiss(_integer_rows(m), m.cols)
    return r


def rank_of_integer_rows(rows: List[List[int]], ncols: int) -> int:
    """Rank of a matrix already given as integer rows (consumed in place)."""
    if not rows or ncols == 0:
        return 0
    r, _, _ = _bareiss(rows, ncols)
    return r


def determinant(m: RationalMatrix) -> Fraction:
    if m.rows != m.cols:
        raise NonSquareMatrixError(f"determinant of a {m.rows}x{m.cols} matrix")
    n = m.rows
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    for i in range(n):
        den = 1
        for a in m.row(i):
            den = den * a.denominator // math.gcd(den, a.denominator)
        scale *= den
    r, rows, sign = _bareiss(_integer_rows(m), n)
    if r < n:
        return Fraction(0)
    return Fraction(sign * rows[n - 1][n - 1]) / scale


# --- rational reduced row echelon form ---

def rref(m: RationalMatrix) -> Tuple[List[List[Fraction]], List[int]]:
    rows = m.to_rows()
    pivots: List[int] = []
    r = 0
    for c in range(m.cols):
        if r == m.rows:
            break
        p = next((i for i in range(r, m.rows) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [a * inv for a in rows[r]]
        for i in range(m.rows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots


def kernel_basis(m: RationalMatrix) -> List[Vector]:
    """Basis of the right kernel, one vector per free column."""
    rows, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][f]
        basis.append(tuple(v))
    return basis


def solve(m: RationalMatrix, b: Sequence) -> Optional[Vector]:
    """One solution of m·x = b, or None when the system is inconsistent."""
    if len(b) != m.rows:
        raise DimensionMismatchError("right-hand side length does not match")
    aug = m.hstack(RationalMatrix.column(b))
    rows, pivots = rref(aug)
    if m.cols in pivots:
        return None
    x = [Fraction(0)] * m.cols
    for r, pc in enumerate(pivots):
        x[pc] = rows[r][m.cols]
    return tuple(x)


def inverse(m: RationalMatrix) -> RationalMatrix:
    if m.rows != m.cols:
        raise NonSquareMatrixError("inverse of a non-square matrix")
    n = m.rows
    rows, pivots = rref(m.hstack(RationalMatrix.identity(n)))
    if pivots[:n] != list(range(n)):
        raise DimensionMismatchError("matrix is not invertible")
    return RationalMatrix.from_rows([r[n:] for r in rows[:n]], cols=n)


def nilpotent_exp(m: RationalMatrix) -> RationalMatrix:
    """exp(m) for nilpotent m as a terminating power series."""
    if m.rows != m.cols:
        raise NonSquareMatrixError("exp of a non-square matrix")
    n = m.rows
    result = RationalMatrix.identity(n)
    term = RationalMatrix.identity(n)
    for k in range(1, n + 2):
        term = (term @ m).scale(Fraction(1, k))
        if term.is_zero():
            return result
        result = result + term
    raise NotNilpotentError(f"power series did not terminate by degree {n + 1}")


def span_rank(vectors: Iterable[Sequence]) -> int:
    vectors = list(vectors)
    if not vectors:
        return 0
    return rank(RationalMatrix.from_rows(vectors))


def rational_sqrt(q) -> Fraction:
    """The positive square root of q, which must be a rational square."""
    q = _frac(q)
    if q <= 0:
        raise NotRationalError(f"{q} has no positive rational square root")
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn != n or rd * rd != d:
        raise NotRationalError(f"{q} is not a rational square")
    return Fraction(rn, rd)
