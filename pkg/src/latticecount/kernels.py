"""Backend selection for the signed box sweep.

The compiled extension is used when it imported and every intermediate value
provably fits in int64; otherwise the pure-Python sweep runs on unbounded ints.
Set ``LATTICECOUNT_PURE_PYTHON=1`` to force the fallback.
"""
from __future__ import annotations

import os
from array import array
from fractions import Fraction
from math import gcd, lcm

from . import exact_linalg as la
from ._sweep_py import sweep_nonzero as _sweep_py

try:
    from ._sweep_ext import sweep_nonzero as _sweep_c
except ImportError:  # extension not built
    _sweep_c = None

if os.environ.get("LATTICECOUNT_PURE_PYTHON"):
    _sweep_c = None

BACKEND = "cython" if _sweep_c is not None else "python"

_INT64_SAFE = 1 << 62


def _normalize_row(a, b):
    g = gcd(*a, b)
    if g > 1:
        a, b = tuple(x // g for x in a), b // g
    return a, b


def cone_rows(K):
    """Integer rows ``(a, b, strict)`` with ``a.x + b >= strict`` describing
    the lattice points of a half-open simplicial cone."""
    adj, D = la.adjugate_int(K.matrix)
    sgn = 1 if D > 0 else -1
    den = lcm(*(Fraction(c).denominator for c in K.apex))
    rows = []
    for row, o in zip(adj, K.open_flags):
        a = tuple(sgn * den * x for x in row)
        b = -la.dot(a, K.apex)
        rows.append(_normalize_row(a, int(b)) + (int(o),))
    return rows


def halfspace_rows(halfspaces):
    """Integer rows for closed halfspaces ``c + a.x >= 0``."""
    rows = []
    for h in halfspaces:
        den = Fraction(h.offset).denominator
        a = tuple(den * x for x in h.normal)
        rows.append(_normalize_row(a, int(h.offset * den)) + (0,))
    return rows


def _fits_int64(rows, lower, upper):
    reach = [max(abs(l), abs(u)) + 1 for l, u in zip(lower, upper)]
    for a, b, s in rows:
        if abs(b) + 1 + sum(abs(x) * m for x, m in zip(a, reach)) >= _INT64_SAFE:
            return False
    return True


def sweep_nonzero(regions, lower, upper, limit=-1, backend=None):
    """Points of the box where ``sum sign * [x in region]`` is nonzero.

    ``regions`` is a sequence of ``(sign, rows)`` with rows from
    :func:`cone_rows` or :func:`halfspace_rows`.  ``backend`` may be
    ``"python"`` or ``"cython"`` to pin one implementation.
    """
    lower, upper = tuple(map(int, lower)), tuple(map(int, upper))
    if len(lower) != len(upper) or any(l > u for l, u in zip(lower, upper)):
        raise ValueError("bad box %s..%s" % (lower, upper))
    A, b, strict, offsets, signs = [], [], [], [0], []
    for sign, rows in regions:
        for a, bb, s in rows:
            A.extend(a)
            b.append(bb)
            strict.append(s)
        offsets.append(len(b))
        signs.append(sign)
    use_c = backend == "cython" or (backend is None and _sweep_c is not None)
    if use_c:
        if _sweep_c is None:
            raise RuntimeError("compiled sweep kernel is not available")
        all_rows = [r for _, rows in regions for r in rows]
        if _fits_int64(all_rows, lower, upper):
            q = lambda xs: array("q", xs)
            return _sweep_c(q(A), q(b), q(strict), q(offsets), q(signs),
                            q(lower), q(upper), limit)
        if backend == "cython":
            raise OverflowError("values exceed int64 range for the compiled kernel")
    return _sweep_py(A, b, strict, offsets, signs, lower, upper, limit)


def signed_indicator(regions, lower, upper, backend=None):
    """Dict of nonzero signed multiplicities on the box."""
    return dict(sweep_nonzero(regions, lower, upper, -1, backend))
