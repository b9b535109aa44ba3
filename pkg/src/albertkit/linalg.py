"""Exact dense linear algebra over a ground field.

Matrices are lists of row lists; vectors are lists.  Everything is small
(dimension <= 27), so plain Gaussian elimination with exact division is
both simple and fast enough.
"""

from __future__ import annotations

from .errors import SingularMap


def identity(F, n):
    return [[F.one if i == j else F.zero for j in range(n)] for i in range(n)]


def transpose(A):
    return [list(col) for col in zip(*A)]


def mat_vec(F, A, v):
    return [F.dot(row, v) for row in A]


def vec_mat(F, v, A):
    return mat_vec(F, transpose(A), v)


def mat_mul(F, A, B):
    Bt = transpose(B)
    return [[F.dot(row, col) for col in Bt] for row in A]


def mat_scale(F, c, A):
    return [[F.mul(c, x) for x in row] for row in A]


def vec_add(F, u, v):
    return [F.add(a, b) for a, b in zip(u, v)]


def vec_sub(F, u, v):
    return [F.sub(a, b) for a, b in zip(u, v)]


def vec_scale(F, c, v):
    return [F.mul(c, x) for x in v]


def vec_is_zero(F, v) -> bool:
    return all(F.is_zero(x) for x in v)


def _rref(F, A):
    """Reduced row echelon form; returns (rows, pivot column list)."""
    rows = [list(r) for r in A]
    n = len(rows)
    m = len(rows[0]) if n else 0
    pivots = []
    r = 0
    for c in range(m):
        pivot = next((i for i in range(r, n) if not F.is_zero(rows[i][c])), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = F.inv(rows[r][c])
        rows[r] = [F.mul(inv, x) for x in rows[r]]
        for i in range(n):
            if i != r and not F.is_zero(rows[i][c]):
                f = rows[i][c]
                rows[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == n:
            break
    return rows, pivots


def rank(F, A) -> int:
    if not A:
        return 0
    return len(_rref(F, A)[1])


def kernel(F, A):
    """Basis of the right kernel of A."""
    if not A:
        return []
    m = len(A[0])
    rows, pivots = _rref(F, A)
    free = [c for c in range(m) if c not in pivots]
    basis = []
    for fc in free:
        v = [F.zero] * m
        v[fc] = F.one
        for r, pc in enumerate(pivots):
            v[pc] = F.neg(rows[r][fc])
        basis.append(v)
    return basis


def invert(F, A):
    n = len(A)
    aug = [list(row) + ident_row for row, ident_row in zip(A, identity(F, n))]
    rows, pivots = _rref(F, aug)
    if pivots != list(range(n)):
        raise SingularMap("matrix is singular")
    return [row[n:] for row in rows]


def is_invertible(F, A) -> bool:
    return rank(F, A) == len(A)


def solve(F, A, b):
    """One solution of A x = b, or None when inconsistent."""
    n = len(A)
    m = len(A[0]) if n else 0
    aug = [list(row) + [bb] for row, bb in zip(A, b)]
    rows, pivots = _rref(F, aug)
    if m in pivots:
        return None
    x = [F.zero] * m
    for r, pc in enumerate(pivots):
        x[pc] = rows[r][m]
    return x
