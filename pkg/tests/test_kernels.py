import random

import pytest
from hypothesis import given, settings, strategies as st

from latticecount import SimplicialCone, kernels
from latticecount.kernels import cone_rows, halfspace_rows, signed_indicator, sweep_nonzero
from latticecount.oracle import IntBox, enumerate_halfopen_cone_in_box

from conftest import random_polygon

BACKENDS = ["python"] + (["cython"] if kernels.BACKEND == "cython" else [])


def cone_strategy():
    vec = st.tuples(st.integers(-4, 4), st.integers(-4, 4))
    apex = st.tuples(st.fractions(-2, 2, max_denominator=3), st.fractions(-2, 2, max_denominator=3))
    return st.builds(SimplicialCone, apex,
                     st.tuples(vec, vec).filter(lambda g: g[0][0] * g[1][1] != g[0][1] * g[1][0]),
                     st.tuples(st.booleans(), st.booleans()))


@settings(max_examples=60)
@given(st.lists(st.tuples(st.sampled_from([1, -1]), cone_strategy()), min_size=1, max_size=3))
def test_backends_match_oracle(regions):
    box = IntBox((-5, -5), (5, 5))
    expected = {}
    for sign, K in regions:
        for x in enumerate_halfopen_cone_in_box(K, box):
            expected[x] = expected.get(x, 0) + sign
    expected = {x: m for x, m in expected.items() if m}
    rows = [(s, cone_rows(K)) for s, K in regions]
    for backend in BACKENDS:
        assert signed_indicator(rows, box.lower, box.upper, backend) == expected


def test_halfspace_rows(Q):
    got = signed_indicator([(1, halfspace_rows(Q.halfspaces))], (-1, -1), (5, 3))
    assert len(got) == 12 and (3, 2) in got


def test_limit():
    K = SimplicialCone((0, 0), [(1, 0), (0, 1)])
    for backend in BACKENDS:
        assert len(sweep_nonzero([(1, cone_rows(K))], (0, 0), (9, 9), 3, backend)) == 3


def test_overflow_falls_back():
    big = 1 << 70
    K = SimplicialCone((0, 0), [(1, 0), (big, 1)])
    rows = [(1, cone_rows(K))]
    got = signed_indicator(rows, (0, 0), (3, 3))
    assert got == {(x, 0): 1 for x in range(4)}
    if kernels.BACKEND == "cython":
        with pytest.raises(OverflowError):
            sweep_nonzero(rows, (0, 0), (3, 3), backend="cython")


def test_bad_box():
    with pytest.raises(ValueError):
        sweep_nonzero([], (1,), (0,))
