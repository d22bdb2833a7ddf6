"""Small exact row reduction over Q for coefficient vectors.

Pivoting is by first nonzero entry so results are deterministic.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Row = Sequence[Fraction]


def rref(rows: Sequence[Row]) -> tuple[list[list[Fraction]], list[int]]:
    mat = [[Fraction(x) for x in r] for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((k for k in range(r, len(mat)) if mat[k][c] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        lead = mat[r][c]
        mat[r] = [x / lead for x in mat[r]]
        for k in range(len(mat)):
            if k != r and mat[k][c] != 0:
                f = mat[k][c]
                mat[k] = [a - f * b for a, b in zip(mat[k], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat, pivots


def rank(rows: Sequence[Row]) -> int:
    return len(rref(rows)[1])


def matmul(a: Sequence[Row], b: Sequence[Row]) -> list[list[Fraction]]:
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum((a[i][k] * b[k][j] for k in range(inner)), Fraction(0)) for j in range(cols)] for i in range(len(a))]


def solve_combination(rows: Sequence[Row], target: Row) -> list[Fraction] | None:
    """Coefficients x with sum_k x_k rows[k] = target, or None if target is outside the span."""
    if not rows:
        return [] if all(t == 0 for t in target) else None
    k = len(rows)
    # columns of the augmented system are the given rows
    aug = [[Fraction(rows[j][i]) for j in range(k)] + [Fraction(target[i])] for i in range(len(target))]
    red, pivots = rref(aug)
    if k in pivots:
        return None
    x = [Fraction(0)] * k
    for r, c in enumerate(pivots):
        x[c] = red[r][k]
    return x


def in_span(rows: Sequence[Row], target: Row) -> bool:
    return solve_combination(rows, target) is not None
