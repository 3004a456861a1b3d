"""Exact integer lattice helpers: Hermite normal form, kernels, ranks, determinants.

Matrices are plain lists of rows of Python ints. Nothing here touches floats.
"""

from fractions import Fraction
from math import gcd


def _row_hnf(rows, ncols):
    """Row-style Hermite normal form by extended-gcd row operations.

    Returns ``(H, U)`` with ``H = U @ rows``, ``U`` unimodular, and the nonzero
    rows of ``H`` on top in echelon form with positive pivots and entries above
    each pivot reduced into ``[0, pivot)``.
    """
    H = [list(r) for r in rows]
    m = len(H)
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    r = 0
    for c in range(ncols):
        if r == m:
            break
        # bring the gcd of column c (rows r..m-1) into row r
        while True:
            nz = [i for i in range(r, m) if H[i][c] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(H[i][c]))
            if p != r:
                H[r], H[p] = H[p], H[r]
                U[r], U[p] = U[p], U[r]
            done = True
            for i in range(r + 1, m):
                if H[i][c]:
                    q = H[i][c] // H[r][c]
                    H[i] = [a - q * b for a, b in zip(H[i], H[r])]
                    U[i] = [a - q * b for a, b in zip(U[i], U[r])]
                    if H[i][c]:
                        done = False
            if done:
                break
        if r < m and H[r][c] != 0:
            if H[r][c] < 0:
                H[r] = [-a for a in H[r]]
                U[r] = [-a for a in U[r]]
            for i in range(r):
                q = H[i][c] // H[r][c]
                if q:
                    H[i] = [a - q * b for a, b in zip(H[i], H[r])]
                    U[i] = [a - q * b for a, b in zip(U[i], U[r])]
            r += 1
    return H, U


def hnf(rows):
    """Nonzero rows of the Hermite normal form of the row lattice of ``rows``."""
    rows = [list(r) for r in rows]
    if not rows:
        return []
    H, _ = _row_hnf(rows, len(rows[0]))
    return [tuple(r) for r in H if any(r)]


def hnf_with_transform(rows):
    """Return ``(H, U)``: full HNF (zero rows included) and unimodular ``U``."""
    rows = [list(r) for r in rows]
    H, U = _row_hnf(rows, len(rows[0]) if rows else 0)
    return [tuple(r) for r in H], [tuple(r) for r in U]


def integer_left_kernel(rows):
    """A basis (in HNF) of ``{x in Z^m : sum_i x_i rows[i] = 0}``."""
    if not rows:
        return []
    H, U = hnf_with_transform(rows)
    kern = [u for h, u in zip(H, U) if not any(h)]
    return hnf(kern)


def rank(rows):
    """Rank over Q of an integer (or rational) matrix."""
    M = [[Fraction(x) for x in r] for r in rows]
    if not M:
        return 0
    ncols = len(M[0])
    rk = 0
    for c in range(ncols):
        piv = next((i for i in range(rk, len(M)) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[rk], M[piv] = M[piv], M[rk]
        for i in range(rk + 1, len(M)):
            if M[i][c]:
                f = M[i][c] / M[rk][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[rk])]
        rk += 1
        if rk == len(M):
            break
    return rk


def det_bareiss(matrix):
    """Exact determinant of a square integer matrix by fraction-free elimination."""
    M = [list(r) for r in matrix]
    n = len(M)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k] != 0), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def in_lattice(basis, vec):
    """True iff ``vec`` is an integer combination of the HNF rows ``basis``."""
    v = list(vec)
    for row in basis:
        c = next(i for i, x in enumerate(row) if x)
        if v[c] % row[c]:
            return False
        q = v[c] // row[c]
        v = [a - q * b for a, b in zip(v, row)]
    return not any(v)


def lattice_intersection(basis1, basis2):
    """HNF basis of the intersection of two sublattices of ``Z^d``."""
    if not basis1 or not basis2:
        return []
    stacked = [list(r) for r in basis1] + [[-x for x in r] for r in basis2]
    kern = integer_left_kernel(stacked)
    k1 = len(basis1)
    d = len(basis1[0])
    vecs = []
    for x in kern:
        v = [0] * d
        for coef, row in zip(x[:k1], basis1):
            if coef:
                v = [a + coef * b for a, b in zip(v, row)]
        vecs.append(v)
    return hnf(vecs)


def primitive(vec):
    """Divide an integer vector by the gcd of its entries."""
    g = 0
    for x in vec:
        g = gcd(g, x)
    if g <= 1:
        return tuple(vec)
    return tuple(x // g for x in vec)
