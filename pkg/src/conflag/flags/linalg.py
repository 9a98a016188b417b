"""Small exact/float matrix helpers (lists of lists, generic scalars)."""

from __future__ import annotations

from fractions import Fraction


def zeros(r: int, c: int):
    return [[0] * c for _ in range(r)]


def identity(n: int):
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = 1
    return m


def elementary(n: int, i: int, j: int, v=1):
    """Matrix with v in 1-based position (i, j)."""
    m = zeros(n, n)
    m[i - 1][j - 1] = v
    return m


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, s):
    return [[x * s for x in row] for row in a]


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    bt = list(zip(*b))
    return [[sum(ra[t] * cb[t] for t in range(k)) for cb in bt] for ra in a]


def mat_vec(a, v):
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def transpose(a):
    return [list(r) for r in zip(*a)]


def mat_exp_nilpotent(a, max_pow: int | None = None):
    """exp of a nilpotent matrix, exact (terminates when powers vanish)."""
    n = len(a)
    out = identity(n)
    term = identity(n)
    k = 1
    limit = max_pow if max_pow is not None else n + 1
    while k <= limit:
        term = mat_mul(term, a)
        if all(all(x == 0 for x in row) for row in term):
            break
        out = mat_add(out, mat_scale(term, Fraction(1, 1) / _factorial(k)
                                     if _is_exact(term) else 1.0 / _factorial(k)))
        k += 1
    return out


def _factorial(k):
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


def _is_exact(m):
    return all(isinstance(x, (int, Fraction)) for row in m for x in row)


def solve_linear(a, b):
    """One solution of A x = b (exact Gaussian elimination), or None.

    A is r x c with r >= or <= c; free variables are set to 0."""
    r = len(a)
    c = len(a[0]) if r else 0
    m = [[Fraction(x) if isinstance(x, int) else x for x in list(row) + [bv]]
         for row, bv in zip(a, b)]
    piv_cols = []
    row = 0
    for col in range(c):
        p = None
        for i in range(row, r):
            if m[i][col] != 0:
                p = i
                break
        if p is None:
            continue
        m[row], m[p] = m[p], m[row]
        pv = m[row][col]
        m[row] = [x / pv for x in m[row]]
        for i in range(r):
            if i != row and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[row])]
        piv_cols.append(col)
        row += 1
        if row == r:
            break
    for i in range(row, r):
        if m[i][c] != 0:
            return None  # inconsistent
    x = [0] * c
    for i, col in enumerate(piv_cols):
        x[col] = m[i][c]
    return x


def det(a):
    """Exact determinant by fraction-full Gaussian elimination."""
    n = len(a)
    m = [list(r) for r in a]
    out = 1
    for col in range(n):
        p = None
        for i in range(col, n):
            if m[i][col] != 0:
                p = i
                break
        if p is None:
            return 0
        if p != col:
            m[col], m[p] = m[p], m[col]
            out = -out
        pv = m[col][col]
        out = out * pv
        inv = 1 / pv if not isinstance(pv, int) else Fraction(1, pv)
        for i in range(col + 1, n):
            if m[i][col] != 0:
                f = m[i][col] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[col])]
    return out
