"""Exact linear algebra over the rationals.

Matrices are plain lists of rows.  Entries may be ``int`` or
``fractions.Fraction``; nothing here ever touches a float.  Row reduction is
fraction-free (Bareiss): every row is first scaled to integers and all
intermediate divisions are exact, so the entries stay integral until the
final back-substitution.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Sequence

__all__ = [
    "LinearMap",
    "exact_kernel",
    "rank",
    "solve",
    "solve_many",
    "integer_rows",
]


@dataclass(frozen=True)
class LinearMap:
    """Dense ``rows x cols`` matrix of exact rationals."""

    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...] = field(repr=False)

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entry count does not match rows x cols")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "LinearMap":
        rows = [tuple(Fraction(x) for x in r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("cannot infer column count of an empty matrix")
            cols = len(rows[0])
        return cls(len(rows), cols, tuple(rows))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "LinearMap":
        cols = len(columns)
        data = [[Fraction(columns[j][i]) for j in range(cols)] for i in range(rows)]
        return cls(rows, cols, tuple(tuple(r) for r in data))

    def __matmul__(self, vec: Sequence) -> list[Fraction]:
        if len(vec) != self.cols:
            raise ValueError("vector length does not match column count")
        return [sum((a * b for a, b in zip(row, vec) if a and b), Fraction(0)) for row in self.entries]

    def transpose(self) -> "LinearMap":
        return LinearMap(self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else ())

    def rank(self) -> int:
        return rank(self.entries)

    def kernel(self) -> tuple[int, list[list[Fraction]]]:
        return exact_kernel(self.entries, self.cols)


def integer_rows(rows: Sequence[Sequence]) -> list[list[int]]:
    """Scale each row by the lcm of its denominators."""
    out = []
    for r in rows:
        r = [Fraction(x) for x in r]
        den = lcm(*(x.denominator for x in r)) if r else 1
        out.append([int(x * den) for x in r])
    return out


def _bareiss(mat: list[list[int]], ncols: int) -> list[int]:
    """In-place fraction-free forward elimination restricted to the first
    ``ncols`` columns.  Returns pivot columns; pivot rows are moved to the top
    in order."""
    nrows = len(mat)
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if mat[i][c]), None)
        if p is None:
            continue
        mat[r], mat[p] = mat[p], mat[r]
        pr = mat[r]
        piv = pr[c]
        for i in range(r + 1, nrows):
            row = mat[i]
            a = row[c]
            if a:
                mat[i] = [(piv * x - a * y) // prev for x, y in zip(row, pr)]
            elif piv != prev:
                mat[i] = [(piv * x) // prev for x in row]
        prev = piv
        pivots.append(c)
        r += 1
    return pivots


def _reduce(mat: list[list[int]], pivots: list[int]) -> list[list[Fraction]]:
    """Back-substitute an echelon form into reduced row echelon form."""
    red = []
    for i, c in enumerate(pivots):
        piv = mat[i][c]
        red.append([Fraction(x, piv) for x in mat[i]])
    for i in range(len(pivots) - 1, -1, -1):
        c = pivots[i]
        for j in range(i):
            f = red[j][c]
            if f:
                red[j] = [x - f * y for x, y in zip(red[j], red[i])]
    return red


def rank(rows: Sequence[Sequence]) -> int:
    if not rows:
        return 0
    mat = integer_rows(rows)
    return len(_bareiss(mat, len(mat[0])))


def exact_kernel(rows: Sequence[Sequence], cols: int | None = None) -> tuple[int, list[list[Fraction]]]:
    """Rank and a basis of the right kernel of the matrix ``rows``.

    The kernel basis is the standard one read off the reduced echelon form:
    one vector per free column, with a 1 in that column.
    """
    if cols is None:
        if not rows:
            raise ValueError("column count required for an empty matrix")
        cols = len(rows[0])
    if not rows:
        return 0, [[Fraction(int(i == j)) for i in range(cols)] for j in range(cols)]
    mat = integer_rows(rows)
    pivots = _bareiss(mat, cols)
    red = _reduce(mat, pivots)
    pivset = set(pivots)
    basis = []
    for f in range(cols):
        if f in pivset:
            continue
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -red[i][f]
        basis.append(v)
    return len(pivots), basis


def solve_many(rows: Sequence[Sequence], rhs: Sequence[Sequence], cols: int | None = None):
    """Solve ``A x = b`` for several right-hand sides at once.

    Returns ``(solutions, kernel_basis)`` where ``solutions[k]`` is a
    particular solution (free variables set to zero) or ``None`` when the
    k-th system is inconsistent.  ``cols`` is needed only when ``rows`` is empty.
    """
    if cols is None:
        if not rows:
            raise ValueError("column count required for an empty matrix")
        cols = len(rows[0])
    nb = len(rhs)
    if not rows:
        ident = [[Fraction(int(i == j)) for i in range(cols)] for j in range(cols)]
        return [[Fraction(0)] * cols for _ in range(nb)], ident
    aug = [list(r) + [b[i] for b in rhs] for i, r in enumerate(rows)]
    mat = integer_rows(aug)
    pivots = _bareiss(mat, cols)
    rk = len(pivots)
    sols: list[list[Fraction] | None] = []
    inconsistent = {k for k in range(nb) if any(mat[i][cols + k] for i in range(rk, len(mat)))}
    red = _reduce(mat, pivots)
    for k in range(nb):
        if k in inconsistent:
            sols.append(None)
            continue
        x = [Fraction(0)] * cols
        for i, c in enumerate(pivots):
            x[c] = red[i][cols + k]
        sols.append(x)
    pivset = set(pivots)
    kernel = []
    for f in range(cols):
        if f in pivset:
            continue
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -red[i][f]
        kernel.append(v)
    return sols, kernel


def solve(rows: Sequence[Sequence], b: Sequence, cols: int | None = None):
    sols, kernel = solve_many(rows, [b], cols)
    return sols[0], kernel
