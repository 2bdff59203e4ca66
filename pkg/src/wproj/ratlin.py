"""Dense exact linear algebra over the rationals (rank, determinant, Krylov).

Used for the constant matrices that show up at the boundary of the parameter
space: nilpotent operators, limit pairings, Krylov generation tests.  Plain
Gaussian elimination with exact division; sizes never exceed a few dozen.
"""

from __future__ import annotations

from ._rat import to_rat


def _copy(rows):
    return [[to_rat(v) for v in row] for row in rows]


def rat_rank(rows) -> int:
    """Rank of a rational matrix (rows of rationals, not necessarily square)."""
    m = _copy(rows)
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    row = 0
    for col in range(ncols):
        pivot = None
        for r in range(row, nrows):
            if m[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        pv = m[row][col]
        for r in range(row + 1, nrows):
            if m[r][col]:
                factor = m[r][col] / pv
                m[r] = [a - factor * b for a, b in zip(m[r], m[row])]
        rank += 1
        row += 1
        if row == nrows:
            break
    return rank


def rat_det(rows):
    """Determinant of a square rational matrix via elimination."""
    m = _copy(rows)
    n = len(m)
    det = to_rat(1)
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if m[r][col]:
                pivot = r
                break
        if pivot is None:
            return to_rat(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        pv = m[col][col]
        det = det * pv
        for r in range(col + 1, n):
            if m[r][col]:
                factor = m[r][col] / pv
                m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
    return det


def mat_vec(rows, vec):
    return [sum((a * b for a, b in zip(row, vec)), to_rat(0)) for row in rows]


def rat_matmul(a, b):
    n, mid, m = len(a), len(b), len(b[0]) if b else 0
    zero = to_rat(0)
    out = [[zero] * m for _ in range(n)]
    for i in range(n):
        for k in range(mid):
            aik = a[i][k]
            if aik:
                row = b[k]
                orow = out[i]
                for j in range(m):
                    if row[j]:
                        orow[j] = orow[j] + aik * row[j]
    return out


def rat_identity(n):
    one, zero = to_rat(1), to_rat(0)
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def krylov_dimension(rows, vec) -> int:
    """Dimension of span(v, Av, A^2 v, ...) for a square rational matrix A."""
    n = len(rows)
    iterates = []
    cur = [to_rat(v) for v in vec]
    for _ in range(n):
        iterates.append(cur)
        cur = mat_vec(rows, cur)
    return rat_rank(iterates)
