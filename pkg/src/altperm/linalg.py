"""Exact rational linear algebra on small dense matrices.

Ranks use fraction-free (Bareiss) elimination over arbitrary-precision
integers; linear solves use a reduced row echelon factorization over
``Fraction`` with the row operations recorded, so one factorization serves
many right-hand sides.  No floating point anywhere.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Mapping, Sequence


def int_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free Gaussian elimination."""
    m = [list(row) for row in rows if any(row)]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    prev_pivot = 1
    for col in range(ncols):
        piv = None
        for r in range(rank, len(m)):
            if m[r][col]:
                piv = r
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pivot = m[rank][col]
        for r in range(rank + 1, len(m)):
            factor = m[r][col]
            row = m[r]
            top = m[rank]
            for c in range(col, ncols):
                row[c] = (row[c] * pivot - factor * top[c]) // prev_pivot
        prev_pivot = pivot
        rank += 1
        if rank == len(m):
            break
    return rank


class InconsistentSystem(ValueError):
    pass


class ColumnSolver:
    """Solve A*c = b repeatedly for a fixed column family A.

    Columns are sparse maps from row keys to integers (or Fractions).  The
    reduced row echelon form of [A | I] is computed once; each solve is a
    sparse product with the recorded row operations plus an exact
    verification of the candidate solution.
    """

    def __init__(self, row_keys: Sequence[Hashable], columns: Sequence[Mapping[Hashable, int]]):
        self.row_keys = list(row_keys)
        self.row_index = {k: i for i, k in enumerate(self.row_keys)}
        if len(self.row_index) != len(self.row_keys):
            raise ValueError("duplicate row keys")
        self.columns = [dict(col) for col in columns]
        nrows, ncols = len(self.row_keys), len(self.columns)
        matrix = [[Fraction(0)] * (ncols + nrows) for _ in range(nrows)]
        for j, col in enumerate(self.columns):
            for key, value in col.items():
                matrix[self.row_index[key]][j] = Fraction(value)
        for i in range(nrows):
            matrix[i][ncols + i] = Fraction(1)

        pivots: list[int] = []
        r = 0
        for col in range(ncols):
            piv = None
            for i in range(r, nrows):
                if matrix[i][col]:
                    piv = i
                    break
            if piv is None:
                continue
            matrix[r], matrix[piv] = matrix[piv], matrix[r]
            inv = 1 / matrix[r][col]
            matrix[r] = [v * inv for v in matrix[r]]
            for i in range(nrows):
                if i != r and matrix[i][col]:
                    f = matrix[i][col]
                    matrix[i] = [a - f * b for a, b in zip(matrix[i], matrix[r])]
            pivots.append(col)
            r += 1
            if r == nrows:
                break
        self.rank = r
        self.pivots = pivots
        # row-operation matrix: E[i] applied to b gives the echelon image
        self._ops = [row[ncols:] for row in matrix]
        self._ncols = ncols

    def solve(self, b: Mapping[Hashable, Fraction]) -> list[Fraction]:
        """Coefficients c with A*c = b exactly, free variables set to zero."""
        support = [(self.row_index[k], Fraction(v)) for k, v in b.items() if v]
        image = []
        for i in range(len(self.row_keys)):
            ops = self._ops[i]
            image.append(sum((ops[j] * v for j, v in support), Fraction(0)))
        for i in range(self.rank, len(self.row_keys)):
            if image[i]:
                raise InconsistentSystem("right-hand side outside the column span")
        coeffs = [Fraction(0)] * self._ncols
        for r, col in enumerate(self.pivots):
            coeffs[col] = image[r]
        # full-rank column families are the expected case; verify exactly
        residual: dict[Hashable, Fraction] = {k: Fraction(v) for k, v in b.items() if v}
        for j, c in enumerate(coeffs):
            if not c:
                continue
            for key, value in self.columns[j].items():
                new = residual.get(key, Fraction(0)) - c * value
                if new:
                    residual[key] = new
                else:
                    residual.pop(key, None)
        if residual:
            raise InconsistentSystem("verification failed: residual nonzero")
        return coeffs
