import random
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from latticecount import Direction, brion, count, from_vrep, lawrence_varchenko, lv_rotation_check
from latticecount.brion import genfuns_agree
from latticecount.errors import DegenerateDirection, NotSimple
from latticecount.oracle import enumerate_polytope

from conftest import random_direction, random_polygon


def test_interval_terms():
    F = brion(from_vrep([(1,), (5,)]))
    assert F.render() == "+1; (1); (1)\n+1; (5); (-1)"


def test_lv_Q(Q):
    F = lawrence_varchenko(Q, (2, 1))
    assert [t.sign for t in F.terms] == [1, -1, 1, -1]
    assert [t.numerator_exponents for t in F.terms] == [((0, 0),), ((3, 0),), ((6, 3),), ((0, 3),)]
    assert [set(t.denominator_exponents) for t in F.terms] == [
        {(1, 0), (0, 1)}, {(1, 0), (1, 1)}, {(1, 0), (1, 1)}, {(1, 0), (0, 1)}]
    assert count(Q, "lv", (2, 1)) == 12


def test_interior_direction_gives_brion(Q):
    key = lambda F: Counter((t.sign, t.numerator_exponents, frozenset(t.denominator_exponents))
                            for t in F.terms)
    assert key(lawrence_varchenko(Q, Direction.interior(Q))) == key(brion(Q))


def test_degenerate_direction(Q):
    with pytest.raises(DegenerateDirection, match=r"\(0, 1\)"):
        lawrence_varchenko(Q, (1, 0))


def test_not_simple(square_pyramid):
    with pytest.raises(NotSimple):
        lawrence_varchenko(square_pyramid, (1, 2, 4))


def test_per_vertex_directions(Q):
    D = Direction((2, 1), {2: (-3, 1), 0: (1, 5)})
    assert count(Q, "lv", D) == 12
    assert lv_rotation_check(Q, D, (1, 3))


def test_brion_non_simple(square_pyramid):
    assert count(square_pyramid) == len(enumerate_polytope(square_pyramid)) == 11


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_lv_matches_brion(seed):
    rng = random.Random(seed)
    P = random_polygon(rng)
    xi = random_direction(rng, P)
    assert genfuns_agree(P, brion(P), lawrence_varchenko(P, xi))
