import random
from fractions import Fraction

import pytest

from latticecount import from_hrep, from_vrep
from latticecount.errors import DegenerateInput


@pytest.fixture
def Q():
    return from_hrep([(0, (1, 0)), (0, (0, 1)), (2, (0, -1)), (2, (-1, 1))])


@pytest.fixture
def unit_square():
    return from_hrep([(0, (1, 0)), (1, (-1, 0)), (0, (0, 1)), (1, (0, -1))])


@pytest.fixture
def unit_cube():
    return from_vrep([(a, b, c) for a in (0, 1) for b in (0, 1) for c in (0, 1)])


@pytest.fixture
def square_pyramid():
    return from_vrep([(0, 0, 0), (2, 0, 0), (0, 2, 0), (2, 2, 0), (1, 1, 2)])


def random_polygon(rng, lo=-10, hi=10, npts=6):
    while True:
        pts = [(rng.randint(lo, hi), rng.randint(lo, hi)) for _ in range(npts)]
        try:
            return from_vrep(pts)
        except DegenerateInput:
            continue


def random_simplex(rng, dim=3, lo=-4, hi=4):
    while True:
        pts = [tuple(rng.randint(lo, hi) for _ in range(dim)) for _ in range(dim + 1)]
        try:
            P = from_vrep(pts)
        except DegenerateInput:
            continue
        if len(P.vertices) == dim + 1:
            return P


def random_direction(rng, P, lo=-9, hi=9):
    """Integer direction not perpendicular to any edge of P."""
    from latticecount.polytope import vertex_cone
    edges = [g for v in range(len(P.vertices)) for g in vertex_cone(P, v).generators]
    while True:
        xi = tuple(rng.randint(lo, hi) for _ in range(P.dim))
        if all(sum(a * b for a, b in zip(xi, e)) != 0 for e in edges):
            return xi


@pytest.fixture
def rng():
    return random.Random(20061)
