"""Small dense linear systems over the rationals."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def solve_rational(A: Sequence[Sequence], b: Sequence) -> list[Fraction]:
    """Solve A x = b exactly by Gauss-Jordan elimination."""
    n = len(A)
    M = [[Fraction(x) for x in row] + [Fraction(rhs)] for row, rhs in zip(A, b)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if M[r][col] != 0), None)
        if pivot is None:
            raise ValueError("singular system")
        M[col], M[pivot] = M[pivot], M[col]
        p = M[col][col]
        M[col] = [x / p for x in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [x - f * y for x, y in zip(M[r], M[col])]
    return [M[r][n] for r in range(n)]
