"""Dense linear algebra over small prime fields.

Matrices are lists of row lists (or tuples) of ints reduced mod p.  An
r x 0 matrix is r empty rows; a 0 x c matrix is the empty list.  The
determinant of the 0 x 0 matrix is 1.
"""

from __future__ import annotations


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    d = 3
    while d * d <= m:
        if m % d == 0:
            return False
        d += 2
    return True


def mat_mul(a, b, p, rows_a, inner, cols_b):
    """Product of an rows_a x inner and an inner x cols_b matrix mod p."""
    out = [[0] * cols_b for _ in range(rows_a)]
    for i in range(rows_a):
        ai = a[i]
        oi = out[i]
        for k in range(inner):
            aik = ai[k]
            if aik:
                bk = b[k]
                for j in range(cols_b):
                    oi[j] = (oi[j] + aik * bk[j]) % p
    return out


def mat_vec(a, v, p, rows, cols):
    return [sum(a[i][k] * v[k] for k in range(cols)) % p for i in range(rows)]


def identity(n: int):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_det(a, p, n) -> int:
    """Determinant of an n x n matrix mod p by Gaussian elimination."""
    if n == 0:
        return 1
    m = [list(row) for row in a]
    det = 1
    for col in range(n):
        piv = None
        for r in range(col, n):
            if m[r][col] % p:
                piv = r
                break
        if piv is None:
            return 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        pivot = m[col][col] % p
        det = (det * pivot) % p
        inv = pow(pivot, p - 2, p)
        for r in range(col + 1, n):
            factor = (m[r][col] * inv) % p
            if factor:
                for c in range(col, n):
                    m[r][c] = (m[r][c] - factor * m[col][c]) % p
    return det % p


def rref(a, p, cols):
    """Reduced row echelon form.  Returns (rows, pivot column list)."""
    m = [list(row) for row in a]
    pivots = []
    row = 0
    for col in range(cols):
        piv = None
        for r in range(row, len(m)):
            if m[r][col] % p:
                piv = r
                break
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        inv = pow(m[row][col], p - 2, p)
        m[row] = [(x * inv) % p for x in m[row]]
        for r in range(len(m)):
            if r != row and m[r][col] % p:
                factor = m[r][col]
                m[r] = [(x - factor * y) % p for x, y in zip(m[r], m[row])]
        pivots.append(col)
        row += 1
    return m[:row], pivots


def mat_rank(a, p, cols) -> int:
    return len(rref(a, p, cols)[0])


def in_rowspan(vec, rref_rows, pivots, p) -> bool:
    """Membership of a vector in the span of reduced echelon rows."""
    v = [x % p for x in vec]
    for row, col in zip(rref_rows, pivots):
        if v[col]:
            factor = v[col]
            v = [(x - factor * y) % p for x, y in zip(v, row)]
    return not any(v)


def mat_inv(a, p, n):
    """Inverse of an n x n matrix mod p, or None if singular."""
    m = [list(row) + ident_row for row, ident_row in zip(a, identity(n))]
    reduced, pivots = rref(m, p, 2 * n) if n else ([], [])
    if pivots[:n] != list(range(n)):
        return None
    return [row[n:] for row in reduced]


def random_matrix(rng, rows: int, cols: int, p: int):
    return [[rng.randrange(p) for _ in range(cols)] for _ in range(rows)]


def random_invertible(rng, n: int, p: int):
    """Uniform-ish invertible matrix by rejection sampling."""
    if n == 0:
        return []
    while True:
        m = random_matrix(rng, n, n, p)
        if mat_det(m, p, n):
            return m
