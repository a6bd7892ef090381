"""Exact rational and integer linear algebra on tuples.

Vectors are tuples, matrices are tuples of row tuples.  Scalars are Python
``int`` or :class:`fractions.Fraction`; nothing here ever touches a float.
Everything is sized for small dimensions (d <= 4 or so), so the algorithms
are the textbook ones with no attempt at asymptotic cleverness.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .errors import DependentRows, SingularMatrix

Rational = Fraction


def frac_vector(v):
    return tuple(Fraction(x) for x in v)


def frac_matrix(M):
    return tuple(tuple(Fraction(x) for x in row) for row in M)


def identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(M):
    return tuple(zip(*M))


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def mat_vec(M, v):
    return tuple(dot(row, v) for row in M)


def mat_mul(A, B):
    Bt = transpose(B)
    return tuple(tuple(dot(row, col) for col in Bt) for row in A)


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, v):
    return tuple(c * a for a in v)


def columns_matrix(vectors):
    """Matrix whose columns are the given vectors."""
    return transpose(tuple(tuple(v) for v in vectors))


def is_integral(v):
    return all(Fraction(x).denominator == 1 for x in v)


def primitive(v):
    """Smallest positive multiple of the rational vector ``v`` that is an
    integer vector with coprime entries.  The zero vector is returned as is."""
    v = frac_vector(v)
    if all(x == 0 for x in v):
        return tuple(0 for _ in v)
    den = lcm(*(x.denominator for x in v))
    ints = [int(x * den) for x in v]
    g = gcd(*ints)
    return tuple(x // g for x in ints)


def det(M):
    """Exact determinant by rational Gaussian elimination."""
    n = len(M)
    if n == 0:
        return Fraction(1)
    if any(len(row) != n for row in M):
        raise ValueError("det needs a square matrix")
    A = [list(row) for row in frac_matrix(M)]
    result = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if A[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            A[k], A[piv] = A[piv], A[k]
            result = -result
        pk = A[k][k]
        result *= pk
        for i in range(k + 1, n):
            if A[i][k] != 0:
                f = A[i][k] / pk
                A[i] = [a - f * b for a, b in zip(A[i], A[k])]
    return result


def inverse(M):
    n = len(M)
    A = [list(row) + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(frac_matrix(M))]
    for k in range(n):
        piv = next((i for i in range(k, n) if A[i][k] != 0), None)
        if piv is None:
            raise SingularMatrix("matrix is singular")
        A[k], A[piv] = A[piv], A[k]
        pk = A[k][k]
        A[k] = [a / pk for a in A[k]]
        for i in range(n):
            if i != k and A[i][k] != 0:
                f = A[i][k]
                A[i] = [a - f * b for a, b in zip(A[i], A[k])]
    return tuple(tuple(row[n:]) for row in A)


def rank(M):
    if not M:
        return 0
    A = [list(row) for row in frac_matrix(M)]
    rows, cols = len(A), len(A[0])
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        for i in range(r + 1, rows):
            if A[i][c] != 0:
                f = A[i][c] / A[r][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        r += 1
        if r == rows:
            break
    return r


def solve(M, b):
    """Solve ``M x = b`` for square nonsingular ``M``."""
    return mat_vec(inverse(M), frac_vector(b))


def kernel_vector(rows, d):
    """Primitive integer normal to ``d-1`` vectors in R^d.

    Uses the generalized cross product (signed maximal minors), so the result
    is the zero vector exactly when the rows are dependent.
    """
    rows = [tuple(r) for r in rows]
    if len(rows) != d - 1:
        raise ValueError("need exactly d-1 rows")
    comps = []
    for j in range(d):
        minor = tuple(tuple(r[k] for k in range(d) if k != j) for r in rows)
        comps.append((-1) ** j * det(minor))
    return primitive(comps)


def adjugate_int(M):
    """Integer adjugate of an integer square matrix: adj(M) = det(M) M^-1."""
    D = det(M)
    inv = inverse(M)
    return tuple(tuple(int(x * D) for x in row) for row in inv), int(D)


# Hermite and Smith normal forms ------------------------------------------

def hnf(M):
    """Row-style Hermite normal form of an integer matrix.

    Returns the nonzero rows of the echelon form: pivots positive, entries
    above each pivot reduced into ``[0, pivot)``.  Two integer matrices span
    the same row lattice iff their HNFs are equal.
    """
    A = [list(map(int, row)) for row in M]
    if not A:
        return ()
    rows, cols = len(A), len(A[0])
    r = 0
    for c in range(cols):
        if r == rows:
            break
        while True:
            nz = [i for i in range(r, rows) if A[i][c] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(A[i][c]))
            A[r], A[piv] = A[piv], A[r]
            done = True
            for i in range(r + 1, rows):
                if A[i][c] != 0:
                    q = A[i][c] // A[r][c]
                    A[i] = [a - q * b for a, b in zip(A[i], A[r])]
                    if A[i][c] != 0:
                        done = False
            if done:
                break
        if all(A[i][c] == 0 for i in range(r, rows)):
            continue
        if A[r][c] < 0:
            A[r] = [-a for a in A[r]]
        for i in range(r):
            q = A[i][c] // A[r][c]
            if q:
                A[i] = [a - q * b for a, b in zip(A[i], A[r])]
        r += 1
    return tuple(tuple(row) for row in A[:r])


def smith_normal_form(M):
    """Smith normal form ``(U, D, V)`` with ``U M V = D`` for nonsingular
    integer ``M``; ``U`` and ``V`` unimodular, ``D`` diagonal with positive
    entries ``d_1 | d_2 | ... | d_n``."""
    n = len(M)
    A = [list(map(int, row)) for row in M]
    if any(len(row) != n for row in A):
        raise ValueError("smith_normal_form needs a square matrix")
    if det(A) == 0:
        raise SingularMatrix("smith_normal_form needs det != 0")
    U = [list(r) for r in identity(n)]
    V = [list(r) for r in identity(n)]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for X in (A, V):
            for row in X:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst -= q * row_src
        A[dst] = [a - q * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a - q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):  # col_dst -= q * col_src
        for X in (A, V):
            for row in X:
                row[dst] -= q * row[src]

    for k in range(n):
        while True:
            # smallest nonzero entry of the trailing block goes to (k, k)
            i, j = min(((i, j) for i in range(k, n) for j in range(k, n) if A[i][j]),
                       key=lambda ij: abs(A[ij[0]][ij[1]]))
            swap_rows(k, i)
            swap_cols(k, j)
            clean = True
            for i in range(k + 1, n):
                q = A[i][k] // A[k][k]
                if q:
                    add_row(i, k, q)
                if A[i][k]:
                    clean = False
            for j in range(k + 1, n):
                q = A[k][j] // A[k][k]
                if q:
                    add_col(j, k, q)
                if A[k][j]:
                    clean = False
            if not clean:
                continue
            p = A[k][k]
            bad = next((i for i in range(k + 1, n)
                        for j in range(k + 1, n) if A[i][j] % p), None)
            if bad is None:
                break
            # restore divisibility: fold the offending row into row k
            add_row(k, bad, -1)
        if A[k][k] < 0:
            A[k] = [-a for a in A[k]]
            U[k] = [-a for a in U[k]]
    freeze = lambda X: tuple(tuple(r) for r in X)
    return freeze(U), freeze(A), freeze(V)


# LLL ---------------------------------------------------------------------

def gram_schmidt(B):
    """Exact Gram-Schmidt: returns (B*, mu) with mu[i][j] for j < i."""
    B = frac_matrix(B)
    Bs = []
    mu = [[Fraction(0)] * len(B) for _ in B]
    for i, b in enumerate(B):
        v = list(b)
        for j in range(i):
            nj = dot(Bs[j], Bs[j])
            mu[i][j] = dot(b, Bs[j]) / nj if nj else Fraction(0)
            v = [a - mu[i][j] * c for a, c in zip(v, Bs[j])]
        Bs.append(tuple(v))
    return tuple(Bs), mu


def lll_reduce(B, delta=Fraction(3, 4)):
    """LLL-reduce the rows of ``B`` with exact rational arithmetic.

    The rows must be linearly independent.  The output spans the same lattice,
    is size reduced (|mu_ij| <= 1/2) and satisfies the Lovasz condition for
    ``delta``.  Integer input gives integer output.
    """
    rows = [list(frac_vector(b)) for b in B]
    n = len(rows)
    if rank(rows) != n:
        raise DependentRows("LLL input rows are linearly dependent")
    Bs, mu = gram_schmidt(rows)
    Bs = [list(b) for b in Bs]
    norms = [dot(b, b) for b in Bs]
    k = 1
    while k < n:
        for j in range(k - 1, -1, -1):
            q = round(mu[k][j])
            if q:
                rows[k] = [a - q * b for a, b in zip(rows[k], rows[j])]
                for i in range(j):
                    mu[k][i] -= q * mu[j][i]
                mu[k][j] -= q
        if norms[k] >= (delta - mu[k][k - 1] ** 2) * norms[k - 1]:
            k += 1
            continue
        rows[k], rows[k - 1] = rows[k - 1], rows[k]
        Bs, mu = gram_schmidt(rows)
        Bs = [list(b) for b in Bs]
        norms = [dot(b, b) for b in Bs]
        k = max(k - 1, 1)
    out = tuple(tuple(r) for r in rows)
    if all(is_integral(r) for r in B):
        out = tuple(tuple(int(x) for x in r) for r in out)
    return out

