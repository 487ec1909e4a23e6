"""Exact rational matrices: row reduction, rank and rank factorization.

Scalars are ``fractions.Fraction`` (always stored reduced, positive
denominator), so every rank reported by this module is exact rather than a
floating-point estimate. Matrices stay small here (N <= 64 in practice) and
entries start in {-2, ..., 2}, so no special big-number handling is needed
beyond what ``Fraction`` already provides.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

Rational = Fraction


class ZeroMatrixError(ValueError):
    """Raised when a rank factorization is requested for an all-zero matrix."""


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot build an exact rational from {value!r}")


class RationalMatrix:
    """Dense row-major matrix of ``Fraction`` entries.

    Instances are treated as immutable: entries are stored as nested tuples
    and all operations return new matrices. A matrix may have zero rows (the
    reduced form of a zero matrix) but never zero columns.
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Iterable[Iterable], *, cols: int | None = None):
        data = tuple(tuple(_as_fraction(x) for x in row) for row in entries)
        if data:
            width = len(data[0])
            if cols is not None and cols != width:
                raise ValueError(f"cols={cols} does not match row width {width}")
        elif cols is None:
            raise ValueError("empty matrix needs an explicit column count")
        else:
            width = cols
        if width == 0:
            raise ValueError("matrix must have at least one column")
        if any(len(row) != width for row in data):
            raise ValueError("rows have inconsistent lengths")
        self.rows = len(data)
        self.cols = width
        self.entries = data

    @classmethod
    def from_int_matrix(cls, array) -> "RationalMatrix":
        """Build from a numpy integer array or nested integer sequences."""
        arr = np.asarray(array)
        if arr.ndim != 2:
            raise ValueError("expected a 2-D array")
        return cls([[int(x) for x in row] for row in arr])

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    def entry(self, i: int, j: int) -> Fraction:
        return self.entries[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self.entries)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def to_float_array(self) -> np.ndarray:
        return np.array([[float(x) for x in row] for row in self.entries],
                        dtype=float).reshape(self.rows, self.cols)

    def to_int_array(self) -> np.ndarray:
        """Convert to an integer array; fails if any entry is non-integral."""
        out = np.zeros((self.rows, self.cols), dtype=np.int64)
        for i, row in enumerate(self.entries):
            for j, x in enumerate(row):
                if x.denominator != 1:
                    raise ValueError(f"entry ({i}, {j}) = {x} is not an integer")
                out[i, j] = x.numerator
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols,
                                                        other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        return f"RationalMatrix({self.rows}x{self.cols})"


@dataclass(frozen=True)
class RrefResult:
    """Reduced row echelon form with all-zero rows dropped.

    ``rref`` has exactly ``rank`` rows; ``pivot_cols`` lists, in increasing
    order, the column of the leading 1 of each row.
    """

    rref: RationalMatrix
    rank: int
    pivot_cols: tuple[int, ...]


def rref(matrix: RationalMatrix) -> RrefResult:
    """Reduced row echelon form over the rationals.

    Pivoting is deterministic: the pivot is the first row (in order) with a
    nonzero entry in the leftmost unreduced column. Exact arithmetic makes
    magnitude-based pivoting unnecessary, and determinism keeps regression
    output bit-stable. Zero rows are dropped from the result, so a zero
    matrix reduces to an empty matrix of rank 0.
    """
    work = [list(row) for row in matrix.entries if any(row)]
    ncols = matrix.cols
    pivot_cols: list[int] = []
    pr = 0
    for pc in range(ncols):
        sel = None
        for i in range(pr, len(work)):
            if work[i][pc] != 0:
                sel = i
                break
        if sel is None:
            continue
        work[pr], work[sel] = work[sel], work[pr]
        pivot = work[pr][pc]
        if pivot != 1:
            work[pr] = [x / pivot for x in work[pr]]
        prow = work[pr]
        support = [c for c in range(pc, ncols) if prow[c] != 0]
        for i in range(len(work)):
            if i == pr:
                continue
            factor = work[i][pc]
            if factor:
                target = work[i]
                for c in support:
                    target[c] -= factor * prow[c]
        pivot_cols.append(pc)
        pr += 1
        if pr == len(work):
            break
    reduced = RationalMatrix(work[:pr], cols=ncols)
    return RrefResult(rref=reduced, rank=pr, pivot_cols=tuple(pivot_cols))


def rank(matrix: RationalMatrix) -> int:
    """Exact rank (number of nonzero rows of the reduced form)."""
    return rref(matrix).rank


def rank_factor(matrix: RationalMatrix) -> tuple[RationalMatrix, RationalMatrix]:
    """Exact rank factorization ``matrix = C * R``.

    ``R`` is the reduced row echelon form (rank r rows) and ``C`` holds the
    columns of the original matrix at R's pivot positions, so the product
    reconstructs the input exactly. Raises :class:`ZeroMatrixError` for a
    zero matrix (there is no rank-1-or-more factorization to return).
    """
    result = rref(matrix)
    if result.rank == 0:
        raise ZeroMatrixError("zero matrix has no rank factorization")
    c_entries = [[row[j] for j in result.pivot_cols] for row in matrix.entries]
    return RationalMatrix(c_entries), result.rref


def vstack(top: RationalMatrix, bottom: RationalMatrix) -> RationalMatrix:
    """Concatenate rows, ``top`` first."""
    if top.cols != bottom.cols:
        raise ValueError(f"column mismatch: {top.cols} vs {bottom.cols}")
    return RationalMatrix(top.entries + bottom.entries, cols=top.cols)


def matvec_exact(matrix: RationalMatrix,
                 vector: Sequence) -> tuple[Fraction, ...]:
    """Exact matrix-vector product."""
    if len(vector) != matrix.cols:
        raise ValueError(f"vector length {len(vector)} != cols {matrix.cols}")
    vec = [_as_fraction(x) for x in vector]
    return tuple(sum(a * b for a, b in zip(row, vec) if a != 0)
                 for row in matrix.entries)


def matmul_exact(left: RationalMatrix,
                 right: RationalMatrix) -> RationalMatrix:
    """Exact matrix product, used to check factorizations."""
    if left.cols != right.rows:
        raise ValueError(f"inner dimension mismatch: {left.cols} vs {right.rows}")
    cols = [right.column(j) for j in range(right.cols)]
    out = [[sum(a * b for a, b in zip(row, col) if a != 0) for col in cols]
           for row in left.entries]
    return RationalMatrix(out, cols=right.cols)
