"""Pure-Python row sweep over signed integer inequality systems.

Same flat-array calling convention as the compiled ``_sweep_ext`` so the two
are interchangeable.  Region ``k`` owns rows ``offsets[k]:offsets[k+1]``;
row ``r`` reads ``A[r*d:(r+1)*d] . x + b[r] >= strict[r]``.
"""
from itertools import product


def sweep_nonzero(A, b, strict, offsets, signs, lower, upper, limit=-1):
    """Points of the box where the signed sum of region indicators is nonzero.

    For each line parallel to the last axis, every region meets it in an
    interval; the signed interval endpoints are swept in order.  Returns up to
    ``limit`` ``(point, multiplicity)`` pairs (all of them when ``limit < 0``).
    """
    d = len(lower)
    last = d - 1
    nreg = len(signs)
    out = []
    for prefix in product(*(range(lower[j], upper[j] + 1) for j in range(last))):
        events = {}
        for k in range(nreg):
            lo, hi = lower[last], upper[last]
            for r in range(offsets[k], offsets[k + 1]):
                row = A[r * d:(r + 1) * d]
                rest = b[r]
                for j in range(last):
                    rest += row[j] * prefix[j]
                a = row[last]
                need = strict[r] - rest
                if a > 0:
                    lo = max(lo, -((-need) // a))
                elif a < 0:
                    hi = min(hi, (-need) // (-a))
                elif need > 0:
                    hi = lo - 1
                if lo > hi:
                    break
            if lo <= hi:
                events[lo] = events.get(lo, 0) + signs[k]
                events[hi + 1] = events.get(hi + 1, 0) - signs[k]
        cur = 0
        positions = sorted(events)
        for pos, nxt in zip(positions, positions[1:]):
            cur += events[pos]
            if cur:
                for x in range(pos, nxt):
                    out.append((prefix + (x,), cur))
                    if 0 <= limit <= len(out):
                        return out
    return out
