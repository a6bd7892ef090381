"""Lattice-point counts, Ehrhart values and quasipolynomials."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .barvinok import cone_genfun_barvinok
from .brion import brion, lawrence_varchenko
from .errors import InvariantError
from .genfun import GenFun, GenFunTerm, specialize_count
from .polytope import dilate

METHODS = ("brion", "lv", "barvinok-brion")


def barvinok_brion(P):
    """Brion's sum with every cone term replaced by its unimodular expansion."""
    terms = []
    for t in brion(P).terms:
        for u in cone_genfun_barvinok(t.source_cone).terms:
            terms.append(GenFunTerm(t.sign * u.sign, u.numerator_exponents,
                                    u.denominator_exponents, u.source_cone))
    return GenFun(P.dim, tuple(terms))


def genfun(P, method="brion", xi=None):
    if method == "brion":
        return brion(P)
    if method == "lv":
        return lawrence_varchenko(P, xi)
    if method in ("barvinok-brion", "barvinok"):
        return barvinok_brion(P)
    raise ValueError("unknown method %r" % method)


def count(P, method="brion", xi=None):
    return specialize_count(genfun(P, method, xi))


def ehrhart_values(P, T, method="brion"):
    if T < 1:
        raise ValueError("T must be positive")
    return [count(dilate(P, t), method) for t in range(1, T + 1)]


@dataclass(frozen=True)
class QuasiPolynomial:
    """``L(t) = components[t % period](t)``; each component is a coefficient
    tuple, constant term first."""

    period: int
    components: tuple

    def __call__(self, t):
        coeffs = self.components[t % self.period]
        return sum(c * t ** k for k, c in enumerate(coeffs))

    def render(self):
        if self.period == 1:
            return "period 1; " + render_polynomial(self.components[0])
        parts = ["r=%d: %s" % (r, render_polynomial(c)) for r, c in enumerate(self.components)]
        return "period %d; " % self.period + "; ".join(parts)


def render_polynomial(coeffs):
    out = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = Fraction(coeffs[k])
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = str(a)
        else:
            mono = "t" if k == 1 else "t^%d" % k
            if a == 1:
                body = mono
            elif a.denominator == 1:
                body = "%d%s" % (a, mono)
            else:
                body = "(%s)%s" % (a, mono)
        out.append((sign, body))
    if not out:
        return "0"
    text = ("-" if out[0][0] == "-" else "") + out[0][1]
    return text + "".join(s + b for s, b in out[1:])


def interpolate(points):
    """Coefficients (constant first) of the polynomial through ``(t, y)``."""
    n = len(points)
    coeffs = [Fraction(0)] * n
    for i, (ti, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (tj, _) in enumerate(points):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= tj * basis[k + 1]
            denom *= ti - tj
        for k in range(n):
            coeffs[k] += yi * basis[k] / denom
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def ehrhart_quasipolynomial(P, method="brion", count_fn=None):
    """Interpolate each residue class of t modulo the lcm of the vertex
    denominators through d+1 dilates, then check two more dilates."""
    count_fn = count_fn or (lambda t: count(dilate(P, t), method))
    q = lcm(*(Fraction(x).denominator for v in P.vertices for x in v))
    d = P.dim
    comps = []
    for r in range(q):
        ts = [t for t in (r + q * k for k in range(d + 4)) if t > 0][:d + 3]
        samples = [(t, count_fn(t)) for t in ts]
        poly = interpolate(samples[:d + 1])
        for t, y in samples[d + 1:]:
            got = sum(c * t ** k for k, c in enumerate(poly))
            if got != y:
                raise InvariantError("quasipolynomial check failed at t=%d: %s != %s" % (t, got, y))
        comps.append(poly)
    return QuasiPolynomial(q, tuple(comps))
