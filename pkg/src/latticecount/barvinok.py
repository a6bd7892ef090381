"""Signed decomposition of a simplicial cone into unimodular cones.

The work happens in the dual.  A dual cone of index N > 1 is split using a
lattice vector z = sum alpha_i u_i with every |alpha_i| <= N^(-1/d): each
generator with alpha_i != 0 is swapped for z, with sign sign(alpha_i), and
the children have index |alpha_i| N < N.  Lower-dimensional pieces are
dropped; their duals contain lines and contribute nothing to the generating
function.  Leaves are dualized back and the original apex reattached.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import ceil

from . import exact_linalg as la
from .cones import SimplicialCone, dual_cone, facet_normals
from .errors import InvariantError, SingularMatrix
from .genfun import GenFun, GenFunTerm, forward_cones, moment_directions
from .kernels import cone_rows, sweep_nonzero


@dataclass(frozen=True)
class SignedCone:
    sign: int
    cone: SimplicialCone


@dataclass(frozen=True)
class Node:
    depth: int
    index: int
    parent: int  # position of the parent node in the trace, -1 at the root


@dataclass(frozen=True)
class DecompositionCert:
    input_cone: SimplicialCone
    leaves: tuple
    max_depth: int
    trace: tuple


def _within_bound(b, N, d):
    # |b_i / N| <= N^(-1/d)  <=>  |b_i|^d <= N^(d-1)
    return all(abs(x) ** d <= N ** (d - 1) for x in b)


def _iroot_floor(S, N, d):
    # largest B >= 0 with B^d * N <= S^d
    B = int(S / N ** (1.0 / d)) + 2
    while B > 0 and B ** d * N > S ** d:
        B -= 1
    return B


def short_vector(gens):
    """Nonzero integer ``z`` with ``W^-1 z`` inside ``[-N^(-1/d), N^(-1/d)]^d``.

    Candidates come from an LLL-reduced basis of the lattice ``N W^-1 Z^d``
    (and pairwise sums and differences of its rows); if none meets the bound
    exactly, every integer point in the box the bound implies is tried.  One
    always exists by Minkowski's theorem.  Returns ``(z, alpha)``.
    """
    W = la.columns_matrix(gens)
    d = len(gens)
    adj, D = la.adjugate_int(W)
    N = abs(D)
    basis = la.lll_reduce(la.transpose(adj))
    cands = list(basis)
    for u, v in combinations(basis, 2):
        cands.append(la.vec_add(u, v))
        cands.append(la.vec_sub(u, v))
    good = [b for b in cands if any(b) and _within_bound(b, N, d)]
    if good:
        b = min(good, key=lambda b: (max(map(abs, b)), b))
        alpha = tuple(Fraction(x, N) for x in b)
        z = la.mat_vec(W, alpha)
        return tuple(int(x) for x in z), alpha
    Winv = la.inverse(W)
    bounds = [_iroot_floor(sum(abs(x) for x in row), N, d) for row in W]
    best = None
    for z in product(*(range(-B, B + 1) for B in bounds)):
        if not any(z):
            continue
        alpha = la.mat_vec(Winv, z)
        if _within_bound([a * N for a in alpha], N, d):
            key = (max(map(abs, alpha)), z)
            if best is None or key < best[0]:
                best = (key, z, alpha)
    if best is None:
        raise InvariantError("no short vector found; Minkowski bound violated")
    return best[1], best[2]


def _decompose_dual(cone, sign):
    """Leaves (sign, unimodular cone) of the dual recursion plus the node trace."""
    trace = [Node(0, cone.index, -1)]
    leaves = []
    stack = [(sign, cone, 0)]
    while stack:
        sgn, C, me = stack.pop()
        N = C.index
        if N == 1:
            leaves.append((sgn, C))
            continue
        z, alpha = short_vector(C.generators)
        if all(a <= 0 for a in alpha):
            z, alpha = tuple(-x for x in z), tuple(-a for a in alpha)
        zp = la.primitive(z)
        for i, a in enumerate(alpha):
            if a == 0:
                continue
            gens = C.generators[:i] + (zp,) + C.generators[i + 1:]
            child = SimplicialCone(C.apex, gens)
            if not child.index < N:
                raise InvariantError("index did not decrease: %d -> %d" % (N, child.index))
            trace.append(Node(trace[me].depth + 1, child.index, me))
            stack.append((sgn * (1 if a > 0 else -1), child, len(trace) - 1))
    return leaves, trace


def unimodular_decompose(K):
    if any(K.open_flags):
        raise ValueError("decomposition expects a closed cone")
    if la.det(K.matrix) == 0:
        raise SingularMatrix("cone generators are dependent")
    origin = tuple(0 for _ in K.apex)
    dual = dual_cone(SimplicialCone(origin, K.generators))
    dual_leaves, trace = _decompose_dual(dual, 1)
    leaves = []
    for sgn, C in dual_leaves:
        back = dual_cone(C)
        leaves.append(SignedCone(sgn, SimplicialCone(K.apex, back.generators)))
    return DecompositionCert(K, tuple(leaves), max(n.depth for n in trace), tuple(trace))


def unimodular_point(K):
    """The single lattice point of a unimodular cone's half-open parallelepiped:
    ``W ceil(W^-1 apex)``."""
    W = K.matrix
    c = la.mat_vec(la.inverse(W), K.apex)
    return tuple(int(x) for x in la.mat_vec(W, [ceil(x) for x in c]))


def cone_genfun_barvinok(K):
    cert = unimodular_decompose(K)
    terms = tuple(GenFunTerm(leaf.sign, (unimodular_point(leaf.cone),),
                             leaf.cone.generators, leaf.cone)
                  for leaf in cert.leaves)
    return GenFun(K.dim, terms)


def check_direction(cert):
    """Integer direction with positive product against every input generator
    and nonzero product against every leaf generator."""
    K = cert.input_cone
    c = tuple(sum(col) for col in zip(*facet_normals(K.generators)))
    leaf_gens = [g for leaf in cert.leaves for g in leaf.cone.generators]
    for lam in moment_directions(K.dim):
        T = 1 + max(abs(la.dot(lam, g)) for g in K.generators)
        xi = tuple(T * a + b for a, b in zip(c, lam))
        if all(la.dot(xi, g) != 0 for g in leaf_gens):
            return xi


def default_box(K):
    reach = 2 * max(abs(x) for g in K.generators for x in g) + 2
    lower = tuple(int(Fraction(a).__floor__()) - reach for a in K.apex)
    upper = tuple(int(Fraction(a).__ceil__()) + reach for a in K.apex)
    return lower, upper


def certificate_regions(cert, xi=None):
    """Signed forward cones whose indicators must cancel exactly.

    The leaves agree with the input only modulo cones containing lines, so
    raw indicators differ.  Expanding every cone forward along one direction
    ``xi`` puts all the series in one ring, where the identity of generating
    functions becomes a pointwise identity.
    """
    if xi is None:
        xi = check_direction(cert)
    regions = []
    for leaf in cert.leaves:
        s, C = forward_cones(leaf.cone, leaf.sign, xi)
        regions.append((s, cone_rows(C)))
    s, C = forward_cones(cert.input_cone, 1, xi)
    regions.append((-s, cone_rows(C)))
    return regions


def certificate_check(cert, box=None, xi=None, backend=None):
    if box is None:
        box = default_box(cert.input_cone)
    lower, upper = box
    return not sweep_nonzero(certificate_regions(cert, xi), lower, upper, limit=1, backend=backend)
