"""Fraction-free elimination over the integers.

Rational systems are scaled row by row to integer systems, reduced with
Bareiss' one-step fraction-free scheme, and only the final back
substitution touches :class:`~fractions.Fraction`. Nothing here knows about
pfaffians, so it serves as the independent check for the pfaffian route.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence


def _integer_row(row: Sequence[Fraction]) -> list[int]:
    row = [Fraction(v) for v in row]
    scale = math.lcm(*(v.denominator for v in row)) if row else 1
    return [int(v * scale) for v in row]


def bareiss_determinant(matrix: Sequence[Sequence[Fraction]]) -> Fraction:
    """Exact determinant of a square rational matrix."""
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    rows = [[Fraction(v) for v in r] for r in matrix]
    scale = Fraction(1)
    ints = []
    for r in rows:
        s = math.lcm(*(v.denominator for v in r))
        scale *= s
        ints.append([int(v * s) for v in r])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if ints[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if ints[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            ints[k], ints[swap] = ints[swap], ints[k]
            sign = -sign
        pivot = ints[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                ints[i][j] = (ints[i][j] * pivot - ints[i][k] * ints[k][j]) // prev
            ints[i][k] = 0
        prev = pivot
    return Fraction(sign * ints[n - 1][n - 1]) / scale


def echelon(matrix: Sequence[Sequence[Fraction]]) -> tuple[list[list[int]], list[int]]:
    """Integer row echelon form of ``matrix`` and its pivot columns.

    Row operations are fraction-free (cross multiplication followed by
    removal of the row content), so entries stay small integers.
    """
    rows = [_integer_row(r) for r in matrix]
    ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        p = rows[r][c]
        for i in range(r + 1, len(rows)):
            f = rows[i][c]
            if f:
                new = [p * a - f * b for a, b in zip(rows[i], rows[r])]
                g = math.gcd(*new)
                rows[i] = [v // g for v in new] if g > 1 else new
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(matrix: Sequence[Sequence[Fraction]]) -> int:
    return len(echelon(matrix)[1])


def _back_substitute(rows, pivots, ncols, free_values: dict[int, Fraction], rhs_col: int | None):
    x = [Fraction(0)] * ncols
    for c, v in free_values.items():
        x[c] = v
    for r in range(len(pivots) - 1, -1, -1):
        c = pivots[r]
        acc = Fraction(rows[r][rhs_col]) if rhs_col is not None else Fraction(0)
        for j in range(c + 1, ncols):
            if rows[r][j]:
                acc -= rows[r][j] * x[j]
        x[c] = acc / rows[r][c]
    return x


def nullspace(matrix: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    """Basis of ``{x : M x = 0}``, one vector per free column."""
    ncols = len(matrix[0])
    rows, pivots = echelon(matrix)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        values = {c: Fraction(int(c == f)) for c in free}
        basis.append(_back_substitute(rows, pivots, ncols, values, None))
    return basis


def solve(matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> list[Fraction] | None:
    """Unique solution of ``M x = rhs``; None if inconsistent.

    Raises ValueError if the system is consistent but underdetermined.
    """
    ncols = len(matrix[0])
    augmented = [list(row) + [b] for row, b in zip(matrix, rhs)]
    rows, pivots = echelon(augmented)
    if pivots and pivots[-1] == ncols:
        return None
    if len(pivots) < ncols:
        raise ValueError("system has infinitely many solutions")
    return _back_substitute(rows, pivots, ncols, {}, ncols)
