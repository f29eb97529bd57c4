"""Exact rational linear algebra for the geometry kernel: rank, linear
solves with nullspace parametrization.  Everything is plain Gaussian
elimination over Fraction; matrices here never exceed a dozen rows.
"""

from __future__ import annotations

from fractions import Fraction


def rank(rows) -> int:
    m = [list(map(Fraction, r)) for r in rows]
    if not m:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    r = 0
    for c in range(n_cols):
        pivot = None
        for i in range(r, n_rows):
            if m[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        pv = m[r][c]
        for i in range(n_rows):
            if i != r and m[i][c] != 0:
                factor = m[i][c] / pv
                for j in range(c, n_cols):
                    m[i][j] -= factor * m[r][j]
        r += 1
        if r == n_rows:
            break
    return r


def rank_of_columns(columns) -> int:
    if not columns:
        return 0
    return rank([[col[i] for col in columns] for i in range(len(columns[0]))])


def solve_affine(a_rows, b):
    """Solve A u = b exactly.

    Returns None when inconsistent, else (particular, basis) where basis
    spans the solution space of A u = 0.
    """
    m = [list(map(Fraction, row)) + [Fraction(bi)] for row, bi in zip(a_rows, b)]
    n_rows = len(m)
    n_cols = len(a_rows[0]) if a_rows else 0
    pivots = []
    r = 0
    for c in range(n_cols):
        pivot = None
        for i in range(r, n_rows):
            if m[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        pv = m[r][c]
        m[r] = [v / pv for v in m[r]]
        for i in range(n_rows):
            if i != r and m[i][c] != 0:
                factor = m[i][c]
                m[i] = [vi - factor * vr for vi, vr in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    for i in range(r, n_rows):
        if m[i][n_cols] != 0:
            return None
    particular = [Fraction(0)] * n_cols
    for row_idx, c in enumerate(pivots):
        particular[c] = m[row_idx][n_cols]
    free_cols = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for fc in free_cols:
        vec = [Fraction(0)] * n_cols
        vec[fc] = Fraction(1)
        for row_idx, c in enumerate(pivots):
            vec[c] = -m[row_idx][fc]
        basis.append(tuple(vec))
    return tuple(particular), tuple(basis)


def mat_vec(rows, vec):
    return tuple(sum((r[j] * vec[j] for j in range(len(vec))), Fraction(0)) for r in rows)


def vec_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vec_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vec_scale(c, a):
    c = Fraction(c)
    return tuple(c * x for x in a)


def sup_norm(a) -> Fraction:
    return max((abs(x) for x in a), default=Fraction(0))
