"""Exact linear algebra over the rationals.

Matrices are plain lists of rows of exact rationals.  Elimination over
QQ is exact, so rank and determinant carry no tolerance.
"""

from __future__ import annotations

from typing import Sequence

from .errors import DimensionError, SingularMatrixError
from .rationals import ONE, QQ, ZERO

Matrix = list[list]


def mat(rows: Sequence[Sequence]) -> Matrix:
    return [[QQ(x) for x in row] for row in rows]


def identity(n: int) -> Matrix:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    if A and B and len(A[0]) != len(B):
        raise DimensionError("matrix product shape mismatch")
    cols = len(B[0]) if B else 0
    return [[sum((A[i][k] * B[k][j] for k in range(len(B))), ZERO)
             for j in range(cols)] for i in range(len(A))]


def mat_vec(A: Matrix, v: Sequence) -> list:
    return [sum((A[i][k] * v[k] for k in range(len(v))), ZERO) for i in range(len(A))]


def transpose(A: Matrix) -> Matrix:
    return [list(col) for col in zip(*A)] if A else []


def rat_rank(A: Matrix) -> int:
    """Exact rank via elimination; empty matrices have rank 0."""
    if not A or not A[0]:
        return 0
    rows = [list(r) for r in A]
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pivot = rows[rank][col]
        for r in range(rank + 1, len(rows)):
            if rows[r][col]:
                factor = rows[r][col] / pivot
                rows[r] = [rows[r][j] - factor * rows[rank][j] for j in range(ncols)]
        rank += 1
        if rank == len(rows):
            break
    return rank


def rat_det(A: Matrix):
    n = len(A)
    if any(len(row) != n for row in A):
        raise DimensionError("determinant of a non-square matrix")
    if n == 0:
        return ONE
    rows = [list(r) for r in A]
    det = ONE
    for col in range(n):
        piv = next((r for r in range(col, n) if rows[r][col]), None)
        if piv is None:
            return ZERO
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = -det
        pivot = rows[col][col]
        det *= pivot
        for r in range(col + 1, n):
            if rows[r][col]:
                factor = rows[r][col] / pivot
                rows[r] = [rows[r][j] - factor * rows[col][j] for j in range(n)]
    return det


def mat_inv(A: Matrix) -> Matrix:
    n = len(A)
    if any(len(row) != n for row in A):
        raise DimensionError("inverse of a non-square matrix")
    rows = [list(A[i]) + list(identity(n)[i]) for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if rows[r][col]), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        rows[col], rows[piv] = rows[piv], rows[col]
        pivot = rows[col][col]
        rows[col] = [x / pivot for x in rows[col]]
        for r in range(n):
            if r != col and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [rows[r][j] - factor * rows[col][j] for j in range(2 * n)]
    return [row[n:] for row in rows]
