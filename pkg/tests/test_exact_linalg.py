from fractions import Fraction
from itertools import permutations, product

import pytest
from hypothesis import given, settings, strategies as st

from latticecount import exact_linalg as la
from latticecount.errors import DependentRows, SingularMatrix


def leibniz_det(M):
    """Permutation-sum determinant, independent of the elimination code."""
    n = len(M)
    total = 0
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = (-1) ** inversions
        for i in range(n):
            term *= M[i][perm[i]]
        total += term
    return total


square_int = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=n, max_size=n))


@pytest.mark.parametrize("M, expected", [
    ([[1, 0], [0, 1]], 1),
    ([[1, 0], [1, 4]], 4),
    ([[1, 0, 1], [0, 1, 1], [0, -1, 1]], 2),
])
def test_det_examples(M, expected):
    assert leibniz_det(M) == expected
    assert la.det(M) == expected


@given(square_int)
def test_det_matches_leibniz(M):
    assert la.det(M) == leibniz_det(M)


def test_inverse_examples():
    assert la.inverse(la.identity(3)) == la.identity(3)
    assert la.inverse([[2, 0], [0, 2]]) == ((Fraction(1, 2), 0), (0, Fraction(1, 2)))
    inv = la.inverse([[1, 0], [1, 4]])
    assert inv == ((1, 0), (Fraction(-1, 4), Fraction(1, 4)))
    assert la.mat_mul([[1, 0], [1, 4]], inv) == la.identity(2)


def test_inverse_singular():
    with pytest.raises(SingularMatrix):
        la.inverse([[1, 2], [2, 4]])


@given(square_int)
def test_inverse_roundtrip(M):
    if leibniz_det(M) == 0:
        return
    inv = la.inverse(M)
    assert la.mat_mul(M, inv) == la.identity(len(M))
    assert la.det(M) * la.det(inv) == 1


def is_unimodular(U):
    return all(Fraction(x).denominator == 1 for row in U for x in row) and abs(la.det(U)) == 1


def check_snf(M):
    U, D, V = la.smith_normal_form(M)
    assert la.mat_mul(la.mat_mul(U, M), V) == D
    assert is_unimodular(U) and is_unimodular(V)
    n = len(M)
    diag = [D[i][i] for i in range(n)]
    assert all(D[i][j] == 0 for i in range(n) for j in range(n) if i != j)
    assert all(x > 0 for x in diag)
    assert all(diag[i + 1] % diag[i] == 0 for i in range(n - 1))
    prod = 1
    for x in diag:
        prod *= x
    assert prod == abs(leibniz_det(M))
    return diag


def test_snf_examples():
    assert la.smith_normal_form(la.identity(2)) == (la.identity(2),) * 3
    assert check_snf([[0, 2], [1, 1]]) == [1, 2]
    assert check_snf([[2, 0], [0, 3]]) == [1, 6]
    # determinantal divisors 1, 10, 300
    assert check_snf([[12, 6, 4], [3, 9, 6], [2, 16, 14]]) == [1, 10, 30]


@given(square_int)
def test_snf_properties(M):
    if leibniz_det(M) != 0:
        check_snf(M)


def test_snf_singular():
    with pytest.raises(SingularMatrix):
        la.smith_normal_form([[1, 1], [1, 1]])


def test_hnf_identifies_lattices():
    assert la.hnf([[2, 0], [0, 3]]) == ((2, 0), (0, 3))
    assert la.hnf([[1, 0], [4, 1]]) == la.hnf([[1, 0], [0, 1]])
    assert la.hnf([[2, 0], [1, 1]]) != la.hnf([[1, 0], [0, 1]])


def brute_shortest(B, R=5):
    best = None
    for c in product(range(-R, R + 1), repeat=len(B)):
        if any(c):
            v = [sum(ci * b[j] for ci, b in zip(c, B)) for j in range(len(B[0]))]
            n = sum(x * x for x in v)
            best = n if best is None else min(best, n)
    return best


def check_lll(B, out, delta=Fraction(3, 4)):
    assert la.hnf(out) == la.hnf(B)
    Bs, mu = la.gram_schmidt(out)
    for i in range(len(out)):
        for j in range(i):
            assert abs(mu[i][j]) <= Fraction(1, 2)
    for k in range(1, len(out)):
        assert la.dot(Bs[k], Bs[k]) >= (delta - mu[k][k - 1] ** 2) * la.dot(Bs[k - 1], Bs[k - 1])


def test_lll_examples():
    assert la.lll_reduce(la.identity(3)) == la.identity(3)
    B = [[1, 0], [4, 1]]
    assert brute_shortest(B) == 1
    out = la.lll_reduce(B)
    assert la.dot(out[0], out[0]) <= 2
    check_lll(B, out)


def test_lll_dependent():
    with pytest.raises(DependentRows):
        la.lll_reduce([[1, 2], [2, 4]])


@settings(max_examples=60)
@given(square_int)
def test_lll_properties(B):
    if leibniz_det(B) == 0:
        return
    check_lll(B, la.lll_reduce(B))


def test_kernel_vector_and_primitive():
    assert la.kernel_vector([(1, 0, 1), (0, 1, 1)], 3) == (-1, -1, 1)
    assert la.kernel_vector([], 1) == (1,)
    assert la.primitive((Fraction(2, 3), Fraction(-4, 3))) == (1, -2)
    assert la.primitive((0, 0)) == (0, 0)
