"""Rational polytopes in both representations, and their vertex cones.

A polytope carries its inequality description (rows ``c + a.x >= 0`` with a
primitive integer normal ``a``) and its vertex list side by side.  Conversion
between the two is done by brute force over subsets, which is fine for the
handful of dimensions and facets this package is meant for: O(C(m, d) * m)
for ``m`` halfspaces.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import ceil, floor

from . import exact_linalg as la
from .errors import DegenerateInput, Empty, Unbounded


@dataclass(frozen=True)
class HalfSpace:
    offset: Fraction
    normal: tuple

    def value(self, x):
        return self.offset + la.dot(self.normal, x)

    def contains(self, x):
        return self.value(x) >= 0


def make_halfspace(offset, normal):
    """Build ``offset + normal.x >= 0`` rescaled to a primitive integer normal."""
    normal = la.frac_vector(normal)
    if all(a == 0 for a in normal):
        raise DegenerateInput("halfspace with zero normal")
    prim = la.primitive(normal)
    k = next(i for i, a in enumerate(normal) if a != 0)
    scale = prim[k] / normal[k]
    return HalfSpace(Fraction(offset) * scale, prim)


@dataclass(frozen=True)
class Polytope:
    dim: int
    halfspaces: tuple
    vertices: tuple
    vertex_active: tuple

    def contains(self, x):
        return all(h.contains(x) for h in self.halfspaces)


@dataclass(frozen=True)
class VertexCone:
    apex: tuple
    generators: tuple


def extreme_rays(normals, d):
    """Extreme rays of the pointed cone ``{x : a.x >= 0 for a in normals}``.

    Each ray is the kernel of some ``d-1`` of the normals, oriented to satisfy
    all the others.  Rays come back primitive, deduplicated, in discovery order.
    """
    rays = []
    for subset in combinations(normals, d - 1):
        r = la.kernel_vector(subset, d)
        if not any(r):
            continue
        for cand in (r, tuple(-x for x in r)):
            if all(la.dot(a, cand) >= 0 for a in normals) and cand not in rays:
                rays.append(cand)
    return rays


def _order_vertices(vertices, d):
    # polygons come back in counterclockwise order from the lex-smallest vertex
    verts = sorted(vertices)
    if d != 2 or len(verts) < 3:
        return tuple(verts)
    start, rest = verts[0], verts[1:]
    # every other vertex lies right of (or straight above) the lex-smallest one,
    # so slope order is angular order
    right = sorted((v for v in rest if v[0] != start[0]),
                   key=lambda v: (v[1] - start[1]) / (v[0] - start[0]))
    above = [v for v in rest if v[0] == start[0]]
    return tuple([start] + right + above)


def from_hrep(halfspaces):
    """Polytope from inequality rows.

    ``halfspaces`` holds :class:`HalfSpace` objects or ``(offset, normal)``
    pairs.  Raises :class:`DegenerateInput` when the normals do not span,
    :class:`Unbounded` when the recession cone is nonzero, and :class:`Empty`
    when no vertex is feasible.
    """
    hs = []
    for h in halfspaces:
        h = h if isinstance(h, HalfSpace) else make_halfspace(*h)
        if h not in hs:
            hs.append(h)
    if not hs:
        raise DegenerateInput("no halfspaces")
    d = len(hs[0].normal)
    if any(len(h.normal) != d for h in hs):
        raise DegenerateInput("halfspaces of mixed dimension")
    normals = [h.normal for h in hs]
    if la.rank(normals) < d:
        raise DegenerateInput("halfspace normals do not span R^%d" % d)
    if extreme_rays(normals, d):
        raise Unbounded("recession cone is nonzero")

    vertices = []
    for subset in combinations(range(len(hs)), d):
        A = [hs[i].normal for i in subset]
        if la.det(A) == 0:
            continue
        x = la.solve(A, [-hs[i].offset for i in subset])
        if x not in vertices and all(h.contains(x) for h in hs):
            vertices.append(x)
    if not vertices:
        raise Empty("no feasible vertex")
    vertices = _order_vertices(vertices, d)
    active = tuple(frozenset(i for i, h in enumerate(hs) if h.value(v) == 0)
                   for v in vertices)
    return Polytope(d, tuple(hs), vertices, active)


def from_vrep(points):
    """Polytope as the convex hull of ``points`` (desk-scale facet search).

    Points that are not vertices of the hull are dropped.
    """
    pts = []
    for p in points:
        p = la.frac_vector(p)
        if p not in pts:
            pts.append(p)
    if not pts:
        raise DegenerateInput("no points")
    d = len(pts[0])
    p0 = pts[0]
    if la.rank([la.vec_sub(p, p0) for p in pts[1:]]) < d:
        raise DegenerateInput("points do not affinely span R^%d" % d)
    facets = []
    for subset in combinations(pts, d):
        n = la.kernel_vector([la.vec_sub(p, subset[0]) for p in subset[1:]], d)
        if not any(n):
            continue
        base = la.dot(n, subset[0])
        vals = [la.dot(n, p) - base for p in pts]
        if all(v >= 0 for v in vals):
            h = HalfSpace(-base, n)
        elif all(v <= 0 for v in vals):
            h = HalfSpace(base, tuple(-a for a in n))
        else:
            continue
        if h not in facets:
            facets.append(h)
    return from_hrep(facets)


def vertex_cone(P, v):
    """Tangent cone of ``P`` at vertex index ``v``: apex and primitive edge
    directions (extreme rays of the cone cut out by the tight constraints)."""
    tight = [P.halfspaces[i].normal for i in sorted(P.vertex_active[v])]
    return VertexCone(P.vertices[v], tuple(extreme_rays(tight, P.dim)))


def dilate(P, t):
    t = Fraction(t)
    if t <= 0:
        raise ValueError("dilation factor must be positive")
    hs = tuple(HalfSpace(h.offset * t, h.normal) for h in P.halfspaces)
    verts = tuple(la.vec_scale(t, v) for v in P.vertices)
    return Polytope(P.dim, hs, verts, P.vertex_active)


def is_simple(P):
    return all(len(vertex_cone(P, v).generators) == P.dim
               for v in range(len(P.vertices)))


def bounding_box(P, pad=0):
    """Integer box ``(lower, upper)`` containing every lattice point of ``P``."""
    lo = tuple(floor(min(v[j] for v in P.vertices)) - pad for j in range(P.dim))
    hi = tuple(ceil(max(v[j] for v in P.vertices)) + pad for j in range(P.dim))
    return lo, hi
