"""Compare the compiled and pure-Python sweep kernels.

    python3 benchmarks/bench_sweep.py
"""
import time

from latticecount import SimplicialCone, from_hrep, unimodular_decompose
from latticecount.barvinok import certificate_regions
from latticecount.polytope import make_halfspace
from latticecount.kernels import BACKEND, halfspace_rows, sweep_nonzero


def timed(fn, repeat=3):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, result


def cases():
    n = 1024
    cert = unimodular_decompose(SimplicialCone((0, 0), [(1, 0), (1, n)]))
    yield "certificate n=1024 on [0,4096]^2", certificate_regions(cert), (0, 0), (4 * n, 4 * n)
    k = 300
    Q = from_hrep([(0, (1, 0)), (0, (0, 1)), (k, (0, -1)), (k, (-1, 1))])
    yield "quadrilateral dilated by 150", [(1, halfspace_rows(Q.halfspaces))], (-1, -1), (2 * k + 1, k + 1)
    cube = [make_halfspace(c, a) for c, a in [(0, (1, 0, 0)), (40, (-1, 0, 0)), (0, (0, 1, 0)),
                                              (40, (0, -1, 0)), (0, (0, 0, 1)), (40, (0, 0, -1))]]
    yield "cube [0,40]^3 in [-5,45]^3", [(1, halfspace_rows(cube))], (-5, -5, -5), (45, 45, 45)


def main():
    print("compiled kernel available: %s" % (BACKEND == "cython"))
    for name, regions, lo, hi in cases():
        tp, rp = timed(lambda: sweep_nonzero(regions, lo, hi, backend="python"), 1)
        line = "%-45s python %8.3fs (%d pts)" % (name, tp, len(rp))
        if BACKEND == "cython":
            tc, rc = timed(lambda: sweep_nonzero(regions, lo, hi, backend="cython"))
            assert sorted(rc) == sorted(rp)
            line += "  cython %8.4fs  speedup %6.1fx" % (tc, tp / tc)
        print(line, flush=True)


if __name__ == "__main__":
    main()
