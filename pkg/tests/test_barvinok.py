import random
from math import log2

import pytest
from hypothesis import given, settings, strategies as st

from latticecount import SimplicialCone, certificate_check, parallelepiped_points, unimodular_decompose
from latticecount.barvinok import (DecompositionCert, SignedCone, cone_genfun_barvinok, short_vector,
                                   unimodular_point)
from latticecount.cones import cone_term
from latticecount.errors import SingularMatrix
from latticecount.genfun import GenFun, signed_points_in_box
from latticecount import exact_linalg as la


def random_cone(rng, d, lo=-5, hi=5):
    while True:
        gens = [la.primitive([rng.randint(lo, hi) for _ in range(d)]) for _ in range(d)]
        if all(any(g) for g in gens) and la.det(la.columns_matrix(gens)) != 0:
            return SimplicialCone(tuple(0 for _ in range(d)), gens)


def check_tree(cert):
    for node in cert.trace[1:]:
        assert node.index < cert.trace[node.parent].index
    for leaf in cert.leaves:
        assert leaf.cone.index == 1
        assert leaf.cone.apex == cert.input_cone.apex


@pytest.mark.parametrize("n", [4, 16, 64, 256, 1024])
def test_two_leaves(n):
    cert = unimodular_decompose(SimplicialCone((0, 0), [(1, 0), (1, n)]))
    check_tree(cert)
    assert len(cert.leaves) == 2 and cert.max_depth == 1
    assert certificate_check(cert, ((0, 0), (4 * n, 4 * n)))


def test_short_vector_bound():
    z, alpha = short_vector(((1, 0), (1, 4)))
    assert any(z)
    assert all(abs(a) ** 2 <= 1 / 4 for a in alpha)


def test_corrupted_sign_fails():
    cert = unimodular_decompose(SimplicialCone((0, 0), [(1, 0), (1, 7)]))
    bad = list(cert.leaves)
    bad[0] = SignedCone(-bad[0].sign, bad[0].cone)
    broken = DecompositionCert(cert.input_cone, tuple(bad), cert.max_depth, cert.trace)
    assert not certificate_check(broken, ((-30, -30), (30, 30)))


def test_unimodular_point():
    from fractions import Fraction
    K = SimplicialCone((Fraction(1, 2), Fraction(-1, 3)), [(1, 0), (0, 1)])
    assert unimodular_point(K) == (1, 0)
    assert parallelepiped_points(K).points == ((1, 0),)


def test_singular_input():
    with pytest.raises(SingularMatrix):
        unimodular_decompose(SimplicialCone((0, 0), [(1, 1), (2, 2)]))


@pytest.mark.parametrize("gens", [[(1, 0), (1, 4)], [(0, 1), (2, 1)], [(3, 1), (-2, 5)]])
def test_agrees_with_parallelepiped(gens):
    K = SimplicialCone((0, 0), gens)
    F = cone_genfun_barvinok(K)
    G = GenFun(2, (cone_term(K),))
    for box in [((-5, -5), (5, 5)), ((0, 0), (12, 12)), ((-9, 2), (3, 14))]:
        assert signed_points_in_box(F, *box) == signed_points_in_box(G, *box)


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_random_3d(seed):
    K = random_cone(random.Random(seed), 3)
    cert = unimodular_decompose(K)
    check_tree(cert)
    assert certificate_check(cert, ((-4, -4, -4), (4, 4, 4)))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_random_2d(seed):
    K = random_cone(random.Random(seed), 2, -20, 20)
    cert = unimodular_decompose(K)
    check_tree(cert)
    assert len(cert.leaves) <= 2 * log2(max(K.index, 2)) + 4
    assert certificate_check(cert)
