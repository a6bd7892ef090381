"""Signed sums of rational terms ``x^a / prod(1 - x^b)``.

No symbolic simplification is ever attempted.  Identities between such sums
are checked semantically: by specializing to a number at ``x -> 1`` along a
generic direction, or by expanding every term as a Laurent series in one
common ring and comparing coefficients on a box.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb, factorial, floor, ceil

from . import exact_linalg as la
from .cones import SimplicialCone, parallelepiped_points
from .errors import DimensionMismatch, MissingSourceCone, NotPolynomial


@dataclass(frozen=True)
class GenFunTerm:
    sign: int
    numerator_exponents: tuple
    denominator_exponents: tuple
    source_cone: SimplicialCone = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "numerator_exponents",
                           tuple(tuple(int(x) for x in a) for a in self.numerator_exponents))
        object.__setattr__(self, "denominator_exponents",
                           tuple(tuple(int(x) for x in b) for b in self.denominator_exponents))
        if self.sign not in (1, -1):
            raise ValueError("term sign must be +1 or -1")
        if any(not any(b) for b in self.denominator_exponents):
            raise ValueError("denominator exponent must be nonzero")

    @property
    def dim(self):
        vecs = self.numerator_exponents or self.denominator_exponents
        return len(vecs[0])

    def render(self):
        vec = lambda v: "(" + ",".join(str(x) for x in v) + ")"
        return "%+d; %s; %s" % (self.sign,
                                " ".join(vec(a) for a in self.numerator_exponents),
                                " ".join(vec(b) for b in self.denominator_exponents))


@dataclass(frozen=True)
class GenFun:
    dim: int
    terms: tuple = ()

    def __add__(self, other):
        return add(self, other)

    def __len__(self):
        return len(self.terms)

    def render(self):
        return "\n".join(t.render() for t in self.terms)


def add(F, G):
    if F.dim != G.dim:
        raise DimensionMismatch("cannot add generating functions in R^%d and R^%d" % (F.dim, G.dim))
    return GenFun(F.dim, F.terms + G.terms)


def parse_term(line):
    """Inverse of :meth:`GenFunTerm.render` (the source cone is not recorded)."""
    sign, nums, dens = (part.strip() for part in line.split(";"))
    vecs = lambda s: [tuple(int(x) for x in tok.strip("()").split(",")) for tok in s.split()]
    return GenFunTerm(int(sign), vecs(nums), vecs(dens))


def parse(text):
    terms = [parse_term(line) for line in text.splitlines() if line.strip()]
    return GenFun(terms[0].dim if terms else 0, tuple(terms))


# direction search -----------------------------------------------------------

def _primes():
    n = 2
    while True:
        if all(n % p for p in range(2, int(n ** 0.5) + 1)):
            yield n
        n += 1


def moment_directions(d):
    """Deterministic candidate directions (1, M, M^2, ...) for M = 2, 3, 5, ..."""
    for M in _primes():
        yield tuple(M ** j for j in range(d))


def generic_direction(vectors, d, start=0):
    """First moment direction with nonzero dot product against every vector."""
    vectors = [v for v in vectors]
    for i, lam in enumerate(moment_directions(d)):
        if i >= start and all(la.dot(lam, v) != 0 for v in vectors):
            return lam


# specialization -------------------------------------------------------------

@lru_cache(maxsize=None)
def bernoulli(n):
    """Bernoulli number B_n with B_1 = -1/2, from sum_{k<=n} C(n+1,k) B_k = 0."""
    if n == 0:
        return Fraction(1)
    return -sum(comb(n + 1, k) * bernoulli(k) for k in range(n)) / (n + 1)


def _series_mul(a, b, order):
    out = [Fraction(0)] * (order + 1)
    for i, x in enumerate(a):
        if x:
            for j in range(order + 1 - i):
                out[i + j] += x * b[j]
    return out


def term_laurent(term, lam):
    """Laurent coefficients of the term at ``x = exp(lam t)``.

    Returns ``[c_{-d}, ..., c_{-1}, c_0]``.  Uses
    ``1/(1 - e^u) = -(1/u) * sum B_n u^n / n!`` for each denominator factor.
    """
    d = len(term.denominator_exponents)
    cs = [la.dot(lam, b) for b in term.denominator_exponents]
    if any(c == 0 for c in cs):
        raise ValueError("direction is orthogonal to a denominator exponent")
    series = [Fraction(0)] * (d + 1)
    for a in term.numerator_exponents:
        s = la.dot(lam, a)
        for n in range(d + 1):
            series[n] += Fraction(s ** n, factorial(n))
    for c in cs:
        bern = [bernoulli(n) * Fraction(c ** n, factorial(n)) for n in range(d + 1)]
        series = _series_mul(series, bern, d)
    scale = Fraction((-1) ** d)
    for c in cs:
        scale /= c
    # series[n] multiplies t^(n-d)
    return [term.sign * scale * x for x in series]


def laurent_coefficients(F, lam=None):
    """Summed coefficients of t^-k (k = dmax..1) and t^0, keyed by power."""
    if lam is None:
        lam = generic_direction([b for t in F.terms for b in t.denominator_exponents], F.dim)
    out = {}
    for term in F.terms:
        coeffs = term_laurent(term, lam)
        d = len(coeffs) - 1
        for n, c in enumerate(coeffs):
            out[n - d] = out.get(n - d, Fraction(0)) + c
    return out


def specialize_count(F, lam=None):
    """Number of lattice points encoded by ``F`` (value at x = 1).

    Raises :class:`NotPolynomial` if the negative-order Laurent coefficients do
    not cancel, which means ``F`` is not the generating function of a finite
    point set.
    """
    coeffs = laurent_coefficients(F, lam)
    bad = {k: c for k, c in coeffs.items() if k < 0 and c != 0}
    if bad:
        raise NotPolynomial("uncancelled pole terms at orders %s" % sorted(bad))
    value = coeffs.get(0, Fraction(0))
    if value.denominator != 1:
        raise NotPolynomial("non-integral constant term %s" % value)
    return int(value)


# series expansion on a box --------------------------------------------------

def forward_cones(K, sign, xi):
    """Rewrite a half-open cone so every generator has positive dot product
    with ``xi``.

    ``v + R_{>=0} w`` and ``-(v + R_{>0} (-w))`` have the same rational
    generating function, and likewise with open and closed swapped, so each
    backward generator is negated with its flag toggled and the sign flipped.
    The result is the cone's expansion in the ring of series supported in a
    ``xi``-halfspace, where all such expansions are compatible.
    """
    gens, flags = [], []
    for g, o in zip(K.generators, K.open_flags):
        p = la.dot(xi, g)
        if p == 0:
            raise ValueError("direction is orthogonal to a generator")
        if p < 0:
            gens.append(tuple(-x for x in g))
            flags.append(not o)
            sign = -sign
        else:
            gens.append(g)
            flags.append(o)
    return sign, SimplicialCone(K.apex, gens, flags)


def walk_cone(K, lower, upper, pts=None):
    """Lattice points of ``K`` in the box, as ``p + sum n_i w_i`` over
    parallelepiped points ``p`` and ``n >= 0``."""
    if pts is None:
        pts = parallelepiped_points(K).points
    W = K.matrix
    Winv = la.inverse(W)
    corners = list(product(*zip(lower, upper)))
    out = []
    for p in pts:
        # ranges for n from the images of the box corners
        images = [la.mat_vec(Winv, la.vec_sub(c, p)) for c in corners]
        ranges = []
        for i in range(len(p)):
            lo = max(0, ceil(min(im[i] for im in images)))
            hi = floor(max(im[i] for im in images))
            ranges.append(range(lo, hi + 1))
        for n in product(*ranges):
            x = la.vec_add(p, la.mat_vec(W, n))
            if all(l <= xi <= u for l, xi, u in zip(lower, x, upper)):
                out.append(x)
    return out


def signed_points_in_box(F, lower, upper, xi=None):
    """Signed multiplicities of the series expansion of ``F`` on an integer box.

    Every term is first brought into forward position for a common direction
    ``xi`` (picked automatically when omitted), then its cone is expanded by
    walking translates of its fundamental parallelepiped.  Returns a dict of
    the points with nonzero multiplicity.  Pass ``xi=False`` to expand every
    term in its own cone without normalization.
    """
    for t in F.terms:
        if t.source_cone is None:
            raise MissingSourceCone("term has no source cone to expand")
    if xi is None:
        xi = generic_direction([g for t in F.terms for g in t.source_cone.generators], F.dim)
    mult = {}
    for t in F.terms:
        if xi is False:
            sign, K, pts = t.sign, t.source_cone, t.numerator_exponents
        else:
            sign, K = forward_cones(t.source_cone, t.sign, xi)
            pts = None
        for x in walk_cone(K, lower, upper, pts):
            mult[x] = mult.get(x, 0) + sign
    return {x: m for x, m in mult.items() if m}
