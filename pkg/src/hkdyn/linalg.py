"""Exact linear algebra over the integers and rationals.

Matrices are lists of lists of Python ints (or Fractions where stated),
row-major. Nothing here ever touches floating point.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DegenerateForm, DimensionMismatch, NotSymmetric

Matrix = list  # list[list[int]] in practice; kept loose on purpose


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(m: Matrix) -> Matrix:
    return [list(row) for row in zip(*m)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if len(a[0]) != len(b):
        raise DimensionMismatch(f"cannot multiply {len(a)}x{len(a[0])} by {len(b)}x{len(b[0])}")
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(a: Matrix, v: list) -> list:
    if len(a[0]) != len(v):
        raise DimensionMismatch(f"matrix has {len(a[0])} columns, vector has {len(v)}")
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def mat_pow(m: Matrix, k: int) -> Matrix:
    if k < 0:
        raise ValueError("negative powers not supported")
    result = identity(len(m))
    base = [list(row) for row in m]
    while k:
        if k & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base) if k > 1 else base
        k >>= 1
    return result


def mat_eq(a: Matrix, b: Matrix) -> bool:
    return len(a) == len(b) and all(ra == rb for ra, rb in zip(a, b))


def is_square(m: Matrix) -> bool:
    return all(len(row) == len(m) for row in m)


def is_symmetric(m: Matrix) -> bool:
    n = len(m)
    return all(m[i][j] == m[j][i] for i in range(n) for j in range(i + 1, n))


def det_bareiss(m: Matrix) -> int:
    """Determinant of an integer matrix by fraction-free Bareiss elimination.

    All intermediate quantities stay integral; divisions are exact.
    """
    n = len(m)
    if n == 0:
        return 1
    a = [[int(x) for x in row] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                q, r = divmod(num, prev)
                assert r == 0, "Bareiss division must be exact"
                a[i][j] = q
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def char_poly(m: Matrix) -> list:
    """Characteristic polynomial det(xI - m) of an integer matrix.

    Returns coefficients ascending (index = power), monic, all integers.
    Uses the Faddeev-LeVerrier recurrence; every division is exact.
    """
    n = len(m)
    if not is_square(m):
        raise DimensionMismatch("characteristic polynomial needs a square matrix")
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    mk = [[0] * n for _ in range(n)]  # running auxiliary matrix
    for k in range(1, n + 1):
        # mk <- m @ mk + c_{n-k+1} I
        mk = mat_mul(m, mk)
        c = coeffs[n - k + 1]
        for i in range(n):
            mk[i][i] += c
        am = mat_mul(m, mk)
        tr = sum(am[i][i] for i in range(n))
        q, r = divmod(-tr, k)
        assert r == 0, "LeVerrier trace division must be exact"
        coeffs[n - k] = q
    return coeffs


def inertia(gram: Matrix) -> tuple:
    """Counts of (positive, negative) eigenvalues of a nondegenerate
    symmetric integer matrix, by exact symmetric elimination.

    Diagonal pivots are taken where available (after a symmetric swap);
    when the entire remaining diagonal vanishes, a 2x2 hyperbolic block
    [[0,c],[c,0]] is split off, contributing (1, 1).
    """
    n = len(gram)
    if not is_square(gram):
        raise DimensionMismatch("Gram matrix must be square")
    if not is_symmetric(gram):
        raise NotSymmetric("Gram matrix must be symmetric")
    a = [[Fraction(x) for x in row] for row in gram]
    live = list(range(n))
    plus = minus = 0
    while live:
        p = None
        for idx in live:
            if a[idx][idx] != 0:
                p = idx
                break
        if p is not None:
            piv = a[p][p]
            if piv > 0:
                plus += 1
            else:
                minus += 1
            rest = [i for i in live if i != p]
            for i in rest:
                ci = a[i][p]
                if ci == 0:
                    continue
                f = ci / piv
                for j in rest:
                    a[i][j] -= f * a[p][j]
            live = rest
            continue
        # whole remaining diagonal is zero: find an off-diagonal entry
        p = live[0]
        q = None
        for idx in live[1:]:
            if a[p][idx] != 0:
                q = idx
                break
        if q is None:
            raise DegenerateForm("symmetric form is degenerate")
        c = a[p][q]
        plus += 1
        minus += 1
        rest = [i for i in live if i not in (p, q)]
        # Schur complement of the block [[0,c],[c,0]]
        for i in rest:
            ai_p, ai_q = a[i][p], a[i][q]
            if ai_p == 0 and ai_q == 0:
                continue
            for j in rest:
                a[i][j] -= (ai_p * a[q][j] + ai_q * a[p][j]) / c
        live = rest
    return plus, minus
