"""Exact Gaussian elimination over any field whose elements support
``+ - * /`` and truthiness (zero is falsy)."""

from __future__ import annotations

from collections.abc import Sequence
from typing import TypeVar

T = TypeVar("T")


class SingularMatrixError(ArithmeticError):
    pass


def solve(matrix: Sequence[Sequence[T]], rhs: Sequence[T]) -> list[T]:
    """Solve ``matrix @ x = rhs`` exactly.

    The first nonzero entry in each column is used as pivot; no numerical
    pivoting is needed because arithmetic is exact.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix) or len(rhs) != n:
        raise ValueError("solve expects a square system")
    rows = [list(row) + [b] for row, b in zip(matrix, rhs)]

    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col]), None)
        if pivot is None:
            raise SingularMatrixError(f"no pivot in column {col}")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        prow = rows[col]
        inv = 1 / prow[col]
        prow[col:] = [e * inv for e in prow[col:]]
        for r in range(n):
            if r == col:
                continue
            factor = rows[r][col]
            if not factor:
                continue
            row = rows[r]
            for c in range(col, n + 1):
                if prow[c]:
                    row[c] = row[c] - factor * prow[c]
    return [rows[i][n] for i in range(n)]
