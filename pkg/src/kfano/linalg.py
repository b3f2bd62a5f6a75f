"""Exact integer and rational linear algebra.

Matrices are plain lists of rows. Integer matrices hold Python ints,
rational ones hold :class:`fractions.Fraction`. Nothing here ever touches
floating point.
"""

from fractions import Fraction
from math import gcd


def as_int_matrix(rows):
    return [[int(x) for x in row] for row in rows]


def shape(A):
    if not A:
        return (0, 0)
    return (len(A), len(A[0]))


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(A):
    if not A:
        return []
    return [list(col) for col in zip(*A)]


def matmul(A, B):
    Bt = transpose(B)
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def matvec(A, v):
    return [sum(a * b for a, b in zip(row, v)) for row in A]


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def vec_gcd(v):
    g = 0
    for x in v:
        g = gcd(g, int(x))
    return g


def primitive(v):
    """Scale a rational vector to the primitive integer vector on its ray."""
    v = [Fraction(x) for x in v]
    den = 1
    for x in v:
        den = den * x.denominator // gcd(den, x.denominator)
    w = [int(x * den) for x in v]
    g = vec_gcd(w)
    if g == 0:
        return w
    return [x // g for x in w]


def determinant(A):
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(A)
    if n == 0:
        return 1
    M = [list(row) for row in A]
    if any(isinstance(x, Fraction) for row in M for x in row):
        return _rational_det(M)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def _rational_det(M):
    n = len(M)
    M = [[Fraction(x) for x in row] for row in M]
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if M[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            M[c], M[p] = M[p], M[c]
            det = -det
        det *= M[c][c]
        for r in range(c + 1, n):
            f = M[r][c] / M[c][c]
            if f:
                M[r] = [a - f * b for a, b in zip(M[r], M[c])]
    return det


def rref(A):
    """Reduced row echelon form over Q. Returns (R, pivot_columns)."""
    M = [[Fraction(x) for x in row] for row in A]
    rows = len(M)
    cols = len(M[0]) if M else 0
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(rows):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    return M, pivots


def rank(A):
    if not A or not A[0]:
        return 0
    return len(rref(A)[1])


def rational_nullspace(A, ncols=None):
    """Basis (list of Fraction vectors) of {x : A x = 0} over Q."""
    if not A:
        n = ncols or 0
        return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    R, pivots = rref(A)
    n = len(A[0])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -R[i][f]
        basis.append(v)
    return basis


def solve_rational(A, b):
    """One solution x of A x = b over Q, or None if inconsistent."""
    n = len(A[0]) if A else 0
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    R, pivots = rref(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for i, p in enumerate(pivots):
        x[p] = R[i][n]
    return x


def inverse_rational(A):
    n = len(A)
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(A)]
    R, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in R[:n]]


def hermite_normal_form(A):
    """Row-style Hermite normal form.

    Returns ``(H, U)`` with ``U`` unimodular and ``U A = H``. Pivots of ``H`` are
    positive and the entries above each pivot lie in ``[0, pivot)``. Zero rows
    are moved to the bottom.
    """
    A = as_int_matrix(A)
    m, n = shape(A)
    H = [list(row) for row in A]
    U = identity(m)
    r = 0
    pivot_cols = []
    for c in range(n):
        if r == m:
            break
        # Euclid on column c among rows r..m-1
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
        if all(H[i][c] == 0 for i in range(r, m)):
            continue
        if H[r][c] < 0:
            H[r] = [-a for a in H[r]]
            U[r] = [-a for a in U[r]]
        for i in range(r):
            q = H[i][c] // H[r][c]
            if q:
                H[i] = [a - q * b for a, b in zip(H[i], H[r])]
                U[i] = [a - q * b for a, b in zip(U[i], U[r])]
        pivot_cols.append(c)
        r += 1
    return H, U


def smith_normal_form(A):
    """Smith normal form ``(S, U, V)`` with ``U A V = S``.

    ``S`` is diagonal with nonnegative entries d_1 | d_2 | ... ; ``U`` and
    ``V`` are unimodular.
    """
    S = as_int_matrix(A)
    m, n = shape(S)
    U = identity(m)
    V = identity(n)

    def swap_rows(i, j):
        S[i], S[j] = S[j], S[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in S:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        S[dst] = [a - q * b for a, b in zip(S[dst], S[src])]
        U[dst] = [a - q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for row in S:
            row[dst] -= q * row[src]
        for row in V:
            row[dst] -= q * row[src]

    for t in range(min(m, n)):
        while True:
            entries = [(abs(S[i][j]), i, j) for i in range(t, m) for j in range(t, n) if S[i][j]]
            if not entries:
                return S, U, V
            _, pi, pj = min(entries)
            swap_rows(t, pi)
            swap_cols(t, pj)
            clean = True
            for i in range(t + 1, m):
                if S[i][t]:
                    add_row(i, t, S[i][t] // S[t][t])
                    if S[i][t]:
                        clean = False
            for j in range(t + 1, n):
                if S[t][j]:
                    add_col(j, t, S[t][j] // S[t][t])
                    if S[t][j]:
                        clean = False
            if not clean:
                continue
            # divisibility: d_t must divide every remaining entry
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if S[i][j] % S[t][t]), None)
            if bad is None:
                break
            add_row(t, bad[0], -1)
        if S[t][t] < 0:
            S[t] = [-a for a in S[t]]
            U[t] = [-a for a in U[t]]
    return S, U, V


def elementary_divisors(A):
    S, _, _ = smith_normal_form(A)
    return [S[i][i] for i in range(min(shape(S))) if S[i][i] != 0]


def integer_kernel(A, ncols=None):
    """Z-basis (rows) of the saturated lattice {v in Z^n : A v = 0}.

    The basis is returned in Hermite normal form so the output is canonical.
    """
    A = as_int_matrix(A)
    n = len(A[0]) if A else (ncols or 0)
    if not A or all(x == 0 for row in A for x in row):
        return identity(n)
    # column operations on A: H^T = U A^T, kernel rows are rows of U past the rank
    H, U = hermite_normal_form(transpose(A))
    r = sum(1 for row in H if any(row))
    basis = U[r:]
    if not basis:
        return []
    K, _ = hermite_normal_form(basis)
    return [row for row in K if any(row)]


def integer_solve(B, v):
    """Integer x with B x = v (B with independent columns) or None."""
    x = solve_rational(B, v)
    if x is None or any(xi.denominator != 1 for xi in x):
        return None
    if matvec(B, x) != [Fraction(a) for a in v]:
        return None
    return [int(xi) for xi in x]


def lattice_index(vectors, rank_expected=None):
    """Index of the lattice spanned by ``vectors`` in its saturation."""
    d = elementary_divisors(vectors)
    if rank_expected is not None and len(d) != rank_expected:
        return 0
    out = 1
    for x in d:
        out *= x
    return out


def is_unimodular(U):
    return abs(determinant(U)) == 1
