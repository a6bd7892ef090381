"""Brion and Lawrence-Varchenko generating functions of a polytope."""
from __future__ import annotations

from dataclasses import dataclass, field

from . import exact_linalg as la
from .cones import SimplicialCone, cone_term, facet_normals, irrational_shift, triangulate
from .errors import DegenerateDirection, NotSimple
from .genfun import GenFun, generic_direction, signed_points_in_box, specialize_count
from .polytope import bounding_box, vertex_cone


@dataclass(frozen=True)
class Direction:
    """A global direction ``xi`` plus optional per-vertex overrides keyed by
    vertex index."""

    xi: tuple = None
    per_vertex: dict = field(default_factory=dict)

    def at(self, v):
        xi = self.per_vertex.get(v, self.xi)
        if xi is None:
            raise DegenerateDirection("no direction given for vertex %d" % v)
        return tuple(int(x) for x in xi)

    @classmethod
    def interior(cls, P):
        """At every vertex a direction with positive product against each of
        its edges (the sum of the inward facet normals of the vertex cone), so
        no edge flips and the LV terms are exactly the Brion terms."""
        per = {}
        for v in range(len(P.vertices)):
            gens = vertex_cone(P, v).generators
            if len(gens) != P.dim:
                raise NotSimple("vertex %d meets %d edges, not %d" % (v, len(gens), P.dim))
            per[v] = tuple(sum(col) for col in zip(*facet_normals(gens)))
        return cls(None, per)


def vertex_terms(P, v):
    """Closed simplicial cones whose generating functions sum to that of the
    vertex cone at ``v``: the cone itself when simplicial, otherwise its
    triangulation moved by one shared irrational shift."""
    K = vertex_cone(P, v)
    cones = triangulate(K)
    if len(cones) == 1:
        return cones
    s = irrational_shift(cones)
    return [c.translate(s) for c in cones]


def brion(P):
    terms = []
    for v in range(len(P.vertices)):
        terms.extend(cone_term(K) for K in vertex_terms(P, v))
    return GenFun(P.dim, tuple(terms))


def lv_cone(apex, edges, xi):
    """Forward cone at a vertex and its sign (-1)^|E-|."""
    gens, flags, sign = [], [], 1
    for w in edges:
        p = la.dot(xi, w)
        if p == 0:
            raise DegenerateDirection("direction %s is perpendicular to edge direction %s"
                                      % (xi, w))
        if p > 0:
            gens.append(w)
            flags.append(False)
        else:
            gens.append(tuple(-x for x in w))
            flags.append(True)
            sign = -sign
    return sign, SimplicialCone(apex, gens, flags)


def lawrence_varchenko(P, direction):
    if not isinstance(direction, Direction):
        direction = Direction(tuple(direction))
    terms = []
    for v in range(len(P.vertices)):
        K = vertex_cone(P, v)
        if len(K.generators) != P.dim:
            raise NotSimple("vertex %s meets %d edges, not %d"
                            % (K.apex, len(K.generators), P.dim))
        sign, C = lv_cone(K.apex, K.generators, direction.at(v))
        terms.append(cone_term(C, sign))
    return GenFun(P.dim, tuple(terms))


def genfuns_agree(P, F, G):
    """Same signed series on P's padded bounding box and the same count."""
    lower, upper = bounding_box(P, pad=2)
    gens = [g for H in (F, G) for t in H.terms for g in t.source_cone.generators]
    xi = generic_direction(gens, P.dim)
    return (signed_points_in_box(F, lower, upper, xi) == signed_points_in_box(G, lower, upper, xi)
            and specialize_count(F) == specialize_count(G))


def lv_rotation_check(P, dir1, dir2):
    return genfuns_agree(P, lawrence_varchenko(P, dir1), lawrence_varchenko(P, dir2))
