"""Exact integer and rational linear algebra used by the rest of the package.

Everything here works over Python ints and fractions.Fraction; no floating
point. Matrices are sequences of equal-length rows and are never mutated.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt


class SingularMatrixError(ValueError):
    pass


class NotPositiveDefiniteError(ValueError):
    pass


def frozen(mat):
    """Copy a matrix into a tuple of tuples."""
    return tuple(tuple(row) for row in mat)


def identity(n, one=1):
    return tuple(tuple(one if i == j else 0 * one for j in range(n)) for i in range(n))


def mat_mul(a, b):
    rows, inner, cols = len(a), len(b), len(b[0])
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols))
        for i in range(rows)
    )


def mat_vec(a, v):
    return tuple(sum(a[i][j] * v[j] for j in range(len(v))) for i in range(len(a)))


def dot(v, w):
    return sum(x * y for x, y in zip(v, w))


def det_int(mat):
    """Determinant of a square integer matrix (fraction-free Bareiss)."""
    n = len(mat)
    if n == 0:
        return 1
    a = [list(row) for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if pivot is None:
                return 0
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def leading_minors(mat):
    """All leading principal minors of a square integer matrix, exactly."""
    n = len(mat)
    return [det_int([row[: k + 1] for row in mat[: k + 1]]) for k in range(n)]


def invert(mat):
    """Exact inverse of a square matrix, as Fractions (Gauss-Jordan)."""
    n = len(mat)
    aug = [
        [Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
        for i, row in enumerate(mat)
    ]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise SingularMatrixError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def solve(mat, rhs):
    """Solve mat @ x = rhs exactly; mat square nonsingular."""
    inv = invert(mat)
    return mat_vec(inv, [Fraction(x) for x in rhs])


def adjugate(mat):
    """(det, adjugate) of a square integer matrix, both exact integers.

    Computed as det * inverse and checked against M adj(M) = det(M) I.
    """
    n = len(mat)
    d = det_int(mat)
    if d == 0:
        raise SingularMatrixError("adjugate of a singular matrix is not supported")
    inv = invert(mat)
    adj = []
    for row in inv:
        out = []
        for x in row:
            v = x * d
            if v.denominator != 1:
                raise ArithmeticError("adjugate entries must be integers")
            out.append(int(v))
        adj.append(tuple(out))
    adj = tuple(adj)
    prod = mat_mul(mat, adj)
    if prod != identity(n, d if d != 0 else 1) and prod != tuple(
        tuple(d if i == j else 0 for j in range(n)) for i in range(n)
    ):
        raise ArithmeticError("adjugate identity check failed")
    return d, adj


def ldl(mat):
    """LDL^T factorization of a symmetric positive definite Fraction matrix.

    Returns (L, D) with L unit lower triangular and D the diagonal, so that
    x^T mat x = sum_i D[i] * (x_i + sum_{j>i} L[j][i] x_j)^2.
    """
    n = len(mat)
    L = [[Fraction(0)] * n for _ in range(n)]
    D = [Fraction(0)] * n
    for j in range(n):
        dj = Fraction(mat[j][j]) - sum(L[j][k] * L[j][k] * D[k] for k in range(j))
        if dj <= 0:
            raise NotPositiveDefiniteError("matrix is not positive definite")
        D[j] = dj
        L[j][j] = Fraction(1)
        for i in range(j + 1, n):
            L[i][j] = (
                Fraction(mat[i][j]) - sum(L[i][k] * L[j][k] * D[k] for k in range(j))
            ) / dj
    return tuple(tuple(row) for row in L), tuple(D)


def floor_sqrt_plus(center, bound):
    """Largest integer x with (x + center)^2 <= bound, or None if none exists.

    center and bound are Fractions; computed without floating point.
    """
    if bound < 0:
        return None
    bn, bd = bound.numerator, bound.denominator
    # sqrt(bound) lies in [t/bd, (t+1)/bd] with t = isqrt(bn*bd)
    t = isqrt(bn * bd)
    guess = (-center.numerator * bd + t * center.denominator) // (
        center.denominator * bd
    )
    x = guess + 2
    while (x + center) > 0 and (x + center) * (x + center) > bound:
        x -= 1
    return x


def integer_window(center, bound):
    """All integers x with (x + center)^2 <= bound, as an inclusive (lo, hi).

    Returns None when the window is empty.
    """
    hi = floor_sqrt_plus(center, bound)
    if hi is None:
        return None
    lo = -floor_sqrt_plus(-center, bound)
    if lo > hi:
        return None
    return lo, hi


def smith_normal_form(mat):
    """Smith decomposition U A V = D of an integer matrix.

    U and V are unimodular; D is diagonal with non-negative entries forming a
    divisibility chain d1 | d2 | ... .
    """
    a = [list(row) for row in mat]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    U = [list(r) for r in identity(rows)]
    V = [list(r) for r in identity(cols)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def add_row(src, dst, f):
        # row dst += f * row src
        a[dst] = [x + f * y for x, y in zip(a[dst], a[src])]
        U[dst] = [x + f * y for x, y in zip(U[dst], U[src])]

    def add_col(src, dst, f):
        for r in a:
            r[dst] += f * r[src]
        for r in V:
            r[dst] += f * r[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        U[i] = [-x for x in U[i]]

    t = 0
    while t < min(rows, cols):
        # find a pivot of minimal absolute value in the remaining block
        pivot = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < best):
                    best = abs(a[i][j])
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        dirty = False
        for i in range(t + 1, rows):
            if a[i][t] != 0:
                q = a[i][t] // a[t][t]
                add_row(t, i, -q)
                if a[i][t] != 0:
                    dirty = True
        for j in range(t + 1, cols):
            if a[t][j] != 0:
                q = a[t][j] // a[t][t]
                add_col(t, j, -q)
                if a[t][j] != 0:
                    dirty = True
        if dirty:
            continue
        # pivot must divide every remaining entry for the divisibility chain
        offender = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if a[i][j] % a[t][t] != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            add_row(offender, t, 1)
            continue
        if a[t][t] < 0:
            negate_row(t)
        t += 1

    d = frozen(a)
    return frozen(U), d, frozen(V)


def snf_diagonal(d):
    """Diagonal entries of a Smith form produced by smith_normal_form."""
    n = min(len(d), len(d[0]) if d else 0)
    return tuple(d[i][i] for i in range(n))


def normalize_fraction_pair(p, q):
    """Reduce p/q with q > 0."""
    if q == 0:
        raise ZeroDivisionError("zero denominator")
    g = gcd(p, q)
    p, q = p // g, q // g
    if q < 0:
        p, q = -p, -q
    return p, q
