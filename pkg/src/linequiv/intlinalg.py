"""Exact integer linear algebra: lattice kernels, LLL, determinants.

Everything runs on Python ints, so there is no overflow to detect; matrices
are plain lists of lists.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Matrix = list[list[int]]


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a - (a // b) * b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def left_kernel(A: Sequence[Sequence[int]]) -> Matrix:
    """Z-basis of {v in Z^r : v A = 0} for an r x c integer matrix A.

    Unimodular row operations bring [A | I] to echelon form in the A block;
    the identity-block rows next to zero A-rows span the kernel lattice.
    Because the transform is unimodular the result is saturated.
    """
    r = len(A)
    if r == 0:
        return []
    c = len(A[0])
    M = [list(A[i]) + [int(i == j) for j in range(r)] for i in range(r)]
    pivot_row = 0
    for col in range(c):
        if pivot_row == r:
            break
        for i in range(pivot_row + 1, r):
            a, b = M[pivot_row][col], M[i][col]
            if b == 0:
                continue
            g, x, y = _xgcd(a, b)
            # [[x, y], [-b/g, a/g]] has determinant 1
            ag, bg = a // g, b // g
            top, bot = M[pivot_row], M[i]
            M[pivot_row] = [x * s + y * t for s, t in zip(top, bot)]
            M[i] = [-bg * s + ag * t for s, t in zip(top, bot)]
        if M[pivot_row][col] != 0:
            pivot_row += 1
    return [row[c:] for row in M[pivot_row:]]


def lll_reduce(basis: Sequence[Sequence[int]], delta: Fraction = Fraction(3, 4)) -> Matrix:
    """LLL-reduce linearly independent integer row vectors.

    Integral variant: Gram-Schmidt data is kept as the integers d_i (Gram
    determinants) and lam[i][j] = d_j * mu[i][j].
    """
    b = [list(v) for v in basis]
    n = len(b)
    if n == 1 and not any(b[0]):
        raise ValueError("LLL input vectors are linearly dependent")
    if n <= 1:
        return b
    delta = Fraction(delta)
    dn, dd = delta.numerator, delta.denominator

    def dot(u, v):
        return sum(x * y for x, y in zip(u, v))

    d = [0] * (n + 1)  # d[0] = 1, d[i+1] for vector i
    d[0] = 1
    lam = [[0] * n for _ in range(n)]

    d[1] = dot(b[0], b[0])
    if d[1] == 0:
        raise ValueError("LLL input vectors are linearly dependent")
    k = 1
    kmax = 0

    def reduce(k, l):
        if 2 * abs(lam[k][l]) > d[l + 1]:
            q = (2 * lam[k][l] + d[l + 1]) // (2 * d[l + 1])
            b[k] = [x - q * y for x, y in zip(b[k], b[l])]
            lam[k][l] -= q * d[l + 1]
            for i in range(l):
                lam[k][i] -= q * lam[l][i]

    def swap(k):
        b[k], b[k - 1] = b[k - 1], b[k]
        for j in range(k - 1):
            lam[k][j], lam[k - 1][j] = lam[k - 1][j], lam[k][j]
        lm = lam[k][k - 1]
        B = (d[k - 1] * d[k + 1] + lm * lm) // d[k]
        for i in range(k + 1, kmax + 1):
            t = lam[i][k]
            lam[i][k] = (d[k + 1] * lam[i][k - 1] - lm * t) // d[k]
            lam[i][k - 1] = (B * t + lm * lam[i][k]) // d[k + 1]
        d[k] = B

    while k < n:
        if k > kmax:
            kmax = k
            for j in range(k + 1):
                u = dot(b[k], b[j])
                for i in range(j):
                    u = (d[i + 1] * u - lam[k][i] * lam[j][i]) // d[i]
                if j < k:
                    lam[k][j] = u
                else:
                    if u == 0:
                        raise ValueError("LLL input vectors are linearly dependent")
                    d[k + 1] = u
        reduce(k, k - 1)
        # Lovasz: d_k d_{k-2} >= (delta d_{k-1}^2 - lam^2), scaled by dd
        if dd * d[k + 1] * d[k - 1] < dn * d[k] * d[k] - dd * lam[k][k - 1] ** 2:
            swap(k)
            k = max(1, k - 1)
        else:
            for l in range(k - 2, -1, -1):
                reduce(k, l)
            k += 1
    return b


def gram_schmidt(basis: Sequence[Sequence[int]]) -> tuple[list[list[Fraction]], list[list[Fraction]]]:
    """Rational Gram-Schmidt: (orthogonal vectors, mu coefficients)."""
    out: list[list[Fraction]] = []
    mu = [[Fraction(0)] * len(basis) for _ in basis]
    for i, v in enumerate(basis):
        w = [Fraction(x) for x in v]
        for j in range(i):
            nj = sum(x * x for x in out[j])
            mu[i][j] = sum(Fraction(x) * y for x, y in zip(v, out[j])) / nj
            w = [x - mu[i][j] * y for x, y in zip(w, out[j])]
        out.append(w)
    return out, mu


def rational_rank(A: Sequence[Sequence[int]]) -> int:
    """Rank over Q by plain Gaussian elimination on Fractions."""
    M = [[Fraction(x) for x in row] for row in A]
    if not M:
        return 0
    rows, cols = len(M), len(M[0])
    rank = 0
    for col in range(cols):
        piv = next((i for i in range(rank, rows) if M[i][col] != 0), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        for i in range(rows):
            if i != rank and M[i][col] != 0:
                f = M[i][col] / M[rank][col]
                M[i] = [x - f * y for x, y in zip(M[i], M[rank])]
        rank += 1
    return rank


def solve_in_span(basis: Sequence[Sequence[int]], v: Sequence[int]) -> list[Fraction] | None:
    """Rational coefficients x with sum x_i basis_i = v, or None if v is not in the Q-span.

    The basis rows must be linearly independent.
    """
    m = len(basis)
    n = len(v)
    # columns are basis vectors; augmented with v
    M = [[Fraction(basis[j][i]) for j in range(m)] + [Fraction(v[i])] for i in range(n)]
    row = 0
    pivots = []
    for col in range(m):
        piv = next((i for i in range(row, n) if M[i][col] != 0), None)
        if piv is None:
            raise ValueError("basis vectors are linearly dependent")
        M[row], M[piv] = M[piv], M[row]
        p = M[row][col]
        M[row] = [x / p for x in M[row]]
        for i in range(n):
            if i != row and M[i][col] != 0:
                f = M[i][col]
                M[i] = [x - f * y for x, y in zip(M[i], M[row])]
        pivots.append(col)
        row += 1
    if any(M[i][m] != 0 for i in range(row, n)):
        return None
    return [M[i][m] for i in range(m)]


def in_lattice(basis: Sequence[Sequence[int]], v: Sequence[int]) -> bool:
    """Whether v is an integer combination of the (independent) basis rows."""
    if not basis:
        return all(x == 0 for x in v)
    x = solve_in_span(basis, v)
    return x is not None and all(c.denominator == 1 for c in x)


def same_lattice(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> bool:
    return all(in_lattice(B, a) for a in A) and all(in_lattice(A, b) for b in B)


def bareiss_det(A: Sequence[Sequence[int]]) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    M = [list(row) for row in A]
    n = len(M)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if M[i][k] != 0), None)
            if piv is None:
                return 0
            M[k], M[piv] = M[piv], M[k]
            sign = -sign
        pk = M[k][k]
        rowk = M[k]
        for i in range(k + 1, n):
            rowi = M[i]
            mik = rowi[k]
            for j in range(k + 1, n):
                rowi[j] = (pk * rowi[j] - mik * rowk[j]) // prev
            rowi[k] = 0
        prev = pk
    return sign * M[n - 1][n - 1]


def char_poly(A: Sequence[Sequence[int]]) -> list[int]:
    """Coefficients of det(tI - A), highest degree first.

    det(tI - A) is evaluated by Bareiss elimination at t = 0..n and the monic
    polynomial recovered by exact Newton interpolation.
    """
    n = len(A)
    if n == 0:
        return [1]
    values = []
    for t in range(n + 1):
        M = [[(t if i == j else 0) - A[i][j] for j in range(n)] for i in range(n)]
        values.append(bareiss_det(M))
    # divided differences on nodes 0..n
    coef = [Fraction(v) for v in values]
    for level in range(1, n + 1):
        for i in range(n, level - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / level
    # expand Newton form sum coef[k] * prod_{j<k} (t - j), low degree first
    poly = [Fraction(0)] * (n + 1)
    for k in range(n, -1, -1):
        # poly = poly * (t - k) + coef[k]
        shifted = [Fraction(0)] + poly[:-1]
        poly = [s - k * p for s, p in zip(shifted, poly)]
        poly[0] += coef[k]
    if any(c.denominator != 1 for c in poly):
        raise ArithmeticError("characteristic polynomial has non-integer coefficients")
    out = [int(c) for c in reversed(poly)]
    if out[0] != 1:
        raise ArithmeticError("characteristic polynomial is not monic")
    return out


def poly_mul(p: Sequence[int], q: Sequence[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def hermite_basis_2d(vectors: Sequence[Sequence[int]]) -> Matrix:
    """Row basis (upper triangular HNF) of the 2-D lattice spanned by ``vectors``."""
    M = [list(v) for v in vectors]
    if not M:
        raise ValueError("no vectors")
    # eliminate column 0
    for i in range(1, len(M)):
        a, b = M[0][0], M[i][0]
        if b == 0:
            continue
        g, x, y = _xgcd(a, b)
        top, bot = M[0], M[i]
        M[0] = [x * s + y * t for s, t in zip(top, bot)]
        M[i] = [-(b // g) * s + (a // g) * t for s, t in zip(top, bot)]
    g2 = 0
    for row in M[1:]:
        g2 = gcd(g2, row[1])
    if M[0][0] == 0 or g2 == 0:
        raise ValueError("vectors do not span a full-rank 2-D lattice")
    if M[0][0] < 0:
        M[0] = [-x for x in M[0]]
    return [[M[0][0], M[0][1] % g2], [0, g2]]

