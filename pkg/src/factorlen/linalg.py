"""Fraction-free exact linear algebra for small dense systems.

Bareiss elimination keeps every intermediate value an integer (each
division is exact), so determinants and linear solves over the rationals
never suffer coefficient blow-up from naive fraction arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm


def _scale_rows_to_int(rows):
    """Clear denominators row by row; returns (int matrix, per-row scales)."""
    out, scales = [], []
    for row in rows:
        fracs = [Fraction(x) for x in row]
        s = lcm(*(f.denominator for f in fracs)) if fracs else 1
        out.append([int(f * s) for f in fracs])
        scales.append(s)
    return out, scales


def bareiss_det(rows: list[list[int]]) -> int:
    """Determinant of a square integer matrix by fraction-free elimination."""
    a = [list(r) for r in rows]
    n = len(a)
    sign = 1
    prev = 1
    for i in range(n):
        # pivot: first nonzero entry in column i at or below the diagonal
        piv = next((r for r in range(i, n) if a[r][i] != 0), None)
        if piv is None:
            return 0
        if piv != i:
            a[i], a[piv] = a[piv], a[i]
            sign = -sign
        for r in range(i + 1, n):
            for c in range(i + 1, n):
                a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) // prev
            a[r][i] = 0
        prev = a[i][i]
    return sign * a[n - 1][n - 1]


def det_rational(rows) -> Fraction:
    """Exact determinant of a square matrix with rational entries."""
    int_rows, scales = _scale_rows_to_int(rows)
    d = bareiss_det(int_rows)
    denom = 1
    for s in scales:
        denom *= s
    return Fraction(d, denom)


def solve_rational(a_rows, b) -> list[Fraction]:
    """Solve A x = b exactly for square nonsingular rational A.

    Forward pass is Bareiss on the augmented integer matrix (row scaling
    leaves the solution unchanged); back substitution runs in Fractions.
    """
    n = len(a_rows)
    aug = [list(a_rows[i]) + [b[i]] for i in range(n)]
    m, _ = _scale_rows_to_int(aug)
    prev = 1
    for i in range(n):
        piv = next((r for r in range(i, n) if m[r][i] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular system")
        if piv != i:
            m[i], m[piv] = m[piv], m[i]
        for r in range(i + 1, n):
            for c in range(i + 1, n + 1):
                m[r][c] = (m[r][c] * m[i][i] - m[r][i] * m[i][c]) // prev
            m[r][i] = 0
        prev = m[i][i]
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        s = Fraction(m[i][n])
        for c in range(i + 1, n):
            s -= m[i][c] * x[c]
        x[i] = s / m[i][i]
    return x
