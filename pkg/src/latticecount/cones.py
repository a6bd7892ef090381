"""Simplicial cones: triangulation, irrational shifts, fundamental
parallelepipeds, per-cone generating-function terms and dual cones."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import ceil, floor

from . import exact_linalg as la
from .errors import NotPointed, SingularMatrix


@dataclass(frozen=True)
class SimplicialCone:
    """``apex + sum_i R_{>=0} g_i`` where generator ``g_i`` is taken open
    (``R_{>0}``) when ``open_flags[i]`` is set."""

    apex: tuple
    generators: tuple
    open_flags: tuple = None

    def __post_init__(self):
        object.__setattr__(self, "apex", la.frac_vector(self.apex))
        object.__setattr__(self, "generators", tuple(tuple(int(x) for x in g) for g in self.generators))
        flags = self.open_flags
        if flags is None:
            flags = (False,) * len(self.generators)
        object.__setattr__(self, "open_flags", tuple(bool(f) for f in flags))

    @property
    def dim(self):
        return len(self.apex)

    @property
    def matrix(self):
        """Generator matrix W with the generators as columns."""
        return la.columns_matrix(self.generators)

    @property
    def index(self):
        return abs(int(la.det(self.matrix)))

    def coordinates(self, x):
        """lambda = W^-1 (x - apex)."""
        return la.mat_vec(la.inverse(self.matrix), la.vec_sub(la.frac_vector(x), self.apex))

    def contains(self, x):
        lam = self.coordinates(x)
        return all(l > 0 if o else l >= 0 for l, o in zip(lam, self.open_flags))

    def translate(self, s):
        return SimplicialCone(la.vec_add(self.apex, la.frac_vector(s)), self.generators, self.open_flags)

    def closed(self):
        return SimplicialCone(self.apex, self.generators)


@dataclass(frozen=True)
class ParallelepipedPoints:
    points: tuple

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)


# facets ---------------------------------------------------------------------

def facet_normals(generators):
    """Inward primitive normals of the facets of a simplicial cone, facet ``i``
    being the one spanned by all generators except ``g_i``."""
    d = len(generators)
    out = []
    for i in range(d):
        others = [g for j, g in enumerate(generators) if j != i]
        n = la.kernel_vector(others, d)
        if la.dot(n, generators[i]) < 0:
            n = tuple(-x for x in n)
        out.append(n)
    return out


def _is_pointed_full(rays, d):
    # pointed and full-dimensional iff the facet normals span R^d
    if la.rank(rays) < d:
        return False
    normals = []
    for subset in combinations(rays, d - 1):
        n = la.kernel_vector(subset, d)
        if not any(n):
            continue
        vals = [la.dot(n, r) for r in rays]
        if all(v >= 0 for v in vals):
            normals.append(n)
        elif all(v <= 0 for v in vals):
            normals.append(tuple(-x for x in n))
    return la.rank(normals) == d if normals else False


def triangulate(K):
    """Placing triangulation of a pointed full-dimensional cone using only its
    own rays.

    Rays are placed in decreasing lexicographic order.  The first ``d``
    independent ones seed the complex; each later ray is coned over every
    boundary facet it sees strictly from outside.  Output cones are closed.
    """
    rays = [tuple(int(x) for x in g) for g in K.generators]
    d = len(K.apex)
    if d == 1:
        if len(rays) != 1:
            raise NotPointed("1-dimensional cone needs exactly one ray")
        return [SimplicialCone(K.apex, rays)]
    if not _is_pointed_full(rays, d):
        raise NotPointed("generators do not span a pointed full-dimensional cone")
    order = sorted(rays, reverse=True)
    seed = []
    for r in order:
        if la.rank(seed + [r]) == len(seed) + 1:
            seed.append(r)
        if len(seed) == d:
            break
    simplices = [tuple(seed)]
    for r in order:
        if r in seed:
            continue
        facet_count = {}
        for s in simplices:
            for i in range(d):
                f = frozenset(s[:i] + s[i + 1:])
                facet_count[f] = facet_count.get(f, 0) + 1
        new = []
        for s in simplices:
            normals = facet_normals(s)
            for i in range(d):
                f = s[:i] + s[i + 1:]
                if facet_count[frozenset(f)] == 1 and la.dot(normals[i], r) < 0:
                    new.append(f[:i] + (r,) + f[i:])
        simplices.extend(new)
    return [SimplicialCone(K.apex, s) for s in simplices]


# irrational shift -----------------------------------------------------------

def union_facet_normals(cones):
    """Facet normals of the union of simplicial cones sharing an apex: the
    subcone facet normals with every ray on their nonnegative side."""
    rays = {g for K in cones for g in K.generators}
    out = []
    for K in cones:
        for n in facet_normals(K.generators):
            if n not in out and all(la.dot(n, r) >= 0 for r in rays):
                out.append(n)
    return out


def shift_is_valid(cones, s):
    """Check a candidate irrational shift for cones sharing one apex.

    (i) no facet hyperplane of any shifted cone meets Z^d, and (ii) each facet
    halfspace of the union keeps the same integer points, so the shifted union
    has the same lattice points as the original.
    """
    s = la.frac_vector(s)
    v = cones[0].apex
    for K in cones:
        for n in facet_normals(K.generators):
            if (la.dot(n, v) + la.dot(n, s)).denominator == 1:
                return False
    for m in union_facet_normals(cones):
        b = la.dot(m, v)
        if ceil(b + la.dot(m, s)) != ceil(b):
            return False
    return True


def irrational_shift(cones):
    """Deterministic search for a valid shift.

    Candidates are ``s = -c/M + (1/M^2, ..., 1/M^(d+1))`` for ``M = 2, 3, ...``
    where ``c`` is the sum of all rays, an interior direction of the union.
    The leading term pushes every union facet inward by less than one lattice
    step; the trailing term breaks ties on facets parallel to ``c``.  For
    large ``M`` both conditions of :func:`shift_is_valid` hold, so the loop ends.
    """
    if len({K.apex for K in cones}) != 1:
        raise ValueError("cones must share an apex")
    d = cones[0].dim
    rays = {g for K in cones for g in K.generators}
    c = tuple(sum(r[j] for r in rays) for j in range(d))
    M = 2
    while True:
        s = tuple(Fraction(-c[j], M) + Fraction(1, M ** (j + 2)) for j in range(d))
        if shift_is_valid(cones, s):
            return s
        M += 1


# fundamental parallelepiped -------------------------------------------------

def _into_box(lam, open_flag):
    # integer n with lam + n in [0,1) (closed) or (0,1] (open)
    return 1 - ceil(lam) if open_flag else -floor(lam)


def parallelepiped_points(K):
    """Lattice points of the half-open fundamental parallelepiped of ``K``.

    Coset representatives of Z^d / W Z^d come from the Smith form
    ``U W V = D``: they are ``U^-1 k`` with ``0 <= k_i < d_i``.  Each is moved
    into the half-open box by an integer combination of the generators.
    """
    W = K.matrix
    U, D, _ = la.smith_normal_form(W)
    Uinv = la.inverse(U)
    Winv = la.inverse(W)
    diag = [D[i][i] for i in range(len(D))]
    pts = []
    for k in product(*(range(di) for di in diag)):
        r = la.mat_vec(Uinv, k)
        lam = la.mat_vec(Winv, la.vec_sub(r, K.apex))
        n = [_into_box(l, o) for l, o in zip(lam, K.open_flags)]
        p = la.vec_add(r, la.mat_vec(W, n))
        pts.append(tuple(int(x) for x in p))
    return ParallelepipedPoints(tuple(sorted(pts)))


def cone_term(K, sign=1):
    from .genfun import GenFunTerm
    return GenFunTerm(sign, parallelepiped_points(K).points, K.generators, K)


def dual_cone(K):
    """Polar ``{x : x.y <= 0 for y in K}`` of a closed cone at the origin.

    Generator ``i`` of the result is the primitive multiple of minus row ``i``
    of ``W^-1``; dualizing twice returns the original generators in order.
    """
    if la.det(K.matrix) == 0:
        raise SingularMatrix("cone generators are dependent")
    Winv = la.inverse(K.matrix)
    gens = [la.primitive([-x for x in row]) for row in Winv]
    return SimplicialCone(tuple(0 for _ in K.apex), gens)
