"""Small exact linear algebra over Gaussian rationals.

Matrices are plain nested lists of Scalar.  Everything is fraction-free in
spirit but implemented directly with exact division; sizes stay small
(structure-constant tables, commutants of tiny representations), so clarity
beats asymptotics here.
"""

from __future__ import annotations

from .scalars import Scalar, as_scalar

Vector = list[Scalar]
Matrix = list[list[Scalar]]


def zeros(n: int, m: int) -> Matrix:
    return [[Scalar(0)] * m for _ in range(n)]


def identity(n: int) -> Matrix:
    out = zeros(n, n)
    for i in range(n):
        out[i][i] = Scalar(1)
    return out


def mat_from(rows) -> Matrix:
    return [[as_scalar(x) for x in row] for row in rows]


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]

def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a: Matrix, c) -> Matrix:
    c = as_scalar(c)
    return [[x * c for x in row] for row in a]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, k, m = len(a), len(b), len(b[0])
    out = zeros(n, m)
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for p in range(k):
            c = ai[p]
            if c.is_zero():
                continue
            bp = b[p]
            for j in range(m):
                if not bp[j].is_zero():
                    oi[j] = oi[j] + c * bp[j]
    return out


def mat_vec(a: Matrix, v: Vector) -> Vector:
    return [
        sum((c * x for c, x in zip(row, v) if not c.is_zero()), Scalar(0)) for row in a
    ]


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return mat_sub(mat_mul(a, b), mat_mul(b, a))


def kron(a: Matrix, b: Matrix) -> Matrix:
    n, m = len(a), len(a[0])
    p, q = len(b), len(b[0])
    out = zeros(n * p, m * q)
    for i in range(n):
        for j in range(m):
            c = a[i][j]
            if c.is_zero():
                continue
            for k in range(p):
                for l in range(q):
                    out[i * p + k][j * q + l] = c * b[k][l]
    return out


def conj_transpose(a: Matrix) -> Matrix:
    return [[a[i][j].conj() for i in range(len(a))] for j in range(len(a[0]))]


def is_zero_matrix(a: Matrix) -> bool:
    return all(x.is_zero() for row in a for x in row)


def rref(a: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form; returns (rref, pivot column indices)."""
    m = [row[:] for row in a]
    if not m:
        return m, []
    rows, cols = len(m), len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot = None
        for i in range(r, rows):
            if not m[i][c].is_zero():
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = m[r][c].inverse()
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and not m[i][c].is_zero():
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(a: Matrix) -> int:
    return len(rref(a)[1])


def nullspace(a: Matrix) -> list[Vector]:
    """A basis of {v : a v = 0}."""
    if not a:
        return []
    red, pivots = rref(a)
    cols = len(a[0])
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Scalar(0)] * cols
        v[fc] = Scalar(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def solve(a: Matrix, b: Vector) -> Vector | None:
    """One exact solution of a x = b, or None if inconsistent."""
    rows = [row[:] + [bv] for row, bv in zip(a, b)]
    red, pivots = rref(rows)
    cols = len(a[0]) if a else 0
    if cols in pivots:
        return None
    x = [Scalar(0)] * cols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][cols]
    return x


def inverse(a: Matrix) -> Matrix:
    n = len(a)
    aug = [row[:] + ident_row for row, ident_row in zip(a, identity(n))]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in red]


def row_space_contains(rows: list[Vector], v: Vector) -> bool:
    if not rows:
        return all(x.is_zero() for x in v)
    return rank(rows) == rank(rows + [v])


def to_complex(a: Matrix):
    import numpy as np

    return np.array([[x.to_complex() for x in row] for row in a], dtype=complex)
