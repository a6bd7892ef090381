"""Brute-force ground truth by scanning integer boxes with exact tests.

Nothing clever happens here on purpose; every other module is checked
against these scans.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from . import exact_linalg as la
from .errors import Unbounded
from .polytope import bounding_box


@dataclass(frozen=True)
class IntBox:
    lower: tuple
    upper: tuple

    def __post_init__(self):
        object.__setattr__(self, "lower", tuple(int(x) for x in self.lower))
        object.__setattr__(self, "upper", tuple(int(x) for x in self.upper))
        if len(self.lower) != len(self.upper) or any(l > u for l, u in zip(self.lower, self.upper)):
            raise ValueError("box needs lower <= upper componentwise")

    def points(self):
        return product(*(range(l, u + 1) for l, u in zip(self.lower, self.upper)))


def enumerate_polytope(P):
    if not P.vertices:
        raise Unbounded("polytope has no vertices")
    box = IntBox(*bounding_box(P, pad=1))
    return [x for x in box.points() if P.contains(x)]


def enumerate_halfopen_cone_in_box(K, box):
    if not isinstance(box, IntBox):
        box = IntBox(*box)
    Winv = la.inverse(K.matrix)
    out = []
    for x in box.points():
        lam = la.mat_vec(Winv, la.vec_sub(x, K.apex))
        if all(l > 0 if o else l >= 0 for l, o in zip(lam, K.open_flags)):
            out.append(x)
    return out


def indicator(points):
    return {tuple(p): 1 for p in points}
