"""Command line front end.

File formats are whitespace separated with ``#`` comments.  Numbers are
integers or ``p/q``.  An optional header line ``hrep d``, ``vrep d`` or
``cone d`` names the format; without it the file extension decides.

* hrep: rows ``c a_1 ... a_d`` meaning ``c + a.x >= 0``
* vrep: rows ``x_1 ... x_d``, one point each
* cone: first row the apex, then one row per generator

Exit codes: 0 ok, 2 parse error, 3 precondition failure, 4 internal
invariant failure.
"""
from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from . import exact_linalg as la
from .barvinok import certificate_check, default_box, unimodular_decompose
from .brion import Direction
from .cones import SimplicialCone
from .ehrhart import count, ehrhart_quasipolynomial, ehrhart_values, genfun
from .errors import InvariantError, LatticeCountError, PreconditionError
from .polytope import dilate, from_hrep, from_vrep

EXIT_PARSE, EXIT_PRECONDITION, EXIT_INTERNAL = 2, 3, 4


class ParseError(LatticeCountError):
    pass


def _rows(text):
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    return rows


def _number(tok, lineno):
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise ParseError("line %d: not a number: %r" % (lineno, tok)) from None


def read_table(text, fmt=None):
    """Return ``(format, d, rows)`` from file text."""
    rows = _rows(text)
    if rows and rows[0][1][0].lower() in ("hrep", "vrep", "cone"):
        lineno, head = rows.pop(0)
        fmt = head[0].lower()
        d = int(head[1]) if len(head) > 1 else None
    else:
        d = None
    if fmt is None:
        raise ParseError("cannot tell the file format: add an hrep/vrep/cone header")
    if not rows:
        raise ParseError("no data rows")
    data = [(lineno, [_number(t, lineno) for t in toks]) for lineno, toks in rows]
    width = d + 1 if (d is not None and fmt == "hrep") else d
    if width is None:
        width = len(data[0][1])
    for lineno, vals in data:
        if len(vals) != width:
            raise ParseError("line %d: expected %d entries, got %d" % (lineno, width, len(vals)))
    d = width - 1 if fmt == "hrep" else width
    return fmt, d, [vals for _, vals in data]


def _format_from_path(path):
    ext = os.path.splitext(path)[1].lower().lstrip(".")
    return ext if ext in ("hrep", "vrep", "cone") else None


def load_polytope(path):
    with open(path) as f:
        fmt, d, rows = read_table(f.read(), _format_from_path(path))
    if fmt == "hrep":
        return from_hrep([(r[0], r[1:]) for r in rows])
    if fmt == "vrep":
        return from_vrep(rows)
    raise ParseError("expected a polytope file, got %s" % fmt)


def load_cone(path):
    with open(path) as f:
        fmt, d, rows = read_table(f.read(), _format_from_path(path) or "cone")
    if fmt != "cone":
        raise ParseError("expected a cone file, got %s" % fmt)
    apex, gens = rows[0], rows[1:]
    if len(gens) != d:
        raise PreconditionError("a simplicial cone in R^%d needs %d generators, got %d"
                                % (d, d, len(gens)))
    return SimplicialCone(apex, [la.primitive(g) for g in gens])


def _int_list(text, name):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ParseError("--%s expects comma-separated integers" % name) from None


def _method(name):
    return "barvinok-brion" if name == "barvinok" else name


def _direction(args, P):
    if args.method != "lv":
        return None
    if args.xi is None:
        raise PreconditionError("--xi is required for --method=lv")
    xi = _int_list(args.xi, "xi")
    if len(xi) != P.dim:
        raise PreconditionError("--xi has %d entries, polytope is in R^%d" % (len(xi), P.dim))
    return Direction(xi)


def cmd_count(args, out):
    P = load_polytope(args.file)
    n = count(P, _method(args.method), _direction(args, P))
    print(n, file=out)
    print("method: %s" % _method(args.method), file=out)


def cmd_genfun(args, out):
    P = load_polytope(args.file)
    print(genfun(P, _method(args.method), _direction(args, P)).render(), file=out)


def _vec(v):
    return "(" + ",".join(str(x) for x in v) + ")"


def cmd_decompose(args, out):
    K = load_cone(args.file)
    cert = unimodular_decompose(K)
    if args.box:
        vals = _int_list(args.box, "box")
        if len(vals) != 2 * K.dim:
            raise ParseError("--box needs lo,hi for each of %d coordinates" % K.dim)
        box = (vals[0::2], vals[1::2])
    else:
        box = default_box(K)
    print("leaves %d" % len(cert.leaves), file=out)
    print("depth %d" % cert.max_depth, file=out)
    for leaf in cert.leaves:
        print("%+d; %s" % (leaf.sign, " ".join(_vec(g) for g in leaf.cone.generators)), file=out)
    ok = certificate_check(cert, box)
    print("check %s on box %s..%s" % ("PASS" if ok else "FAIL", _vec(box[0]), _vec(box[1])), file=out)
    if not ok:
        raise InvariantError("decomposition certificate failed")


def cmd_ehrhart(args, out):
    P = load_polytope(args.file)
    if args.tmax < P.dim + 2:
        raise PreconditionError("--tmax must be at least d+2 = %d" % (P.dim + 2))
    method = _method(args.method)
    values = ehrhart_values(P, args.tmax, method)
    known = dict(enumerate(values, 1))

    def count_fn(t):
        if t not in known:
            known[t] = count(dilate(P, t), method)
        return known[t]

    qp = ehrhart_quasipolynomial(P, method, count_fn)
    print(" ".join(map(str, values)) + "; " + qp.render(), file=out)


def build_parser():
    p = argparse.ArgumentParser(prog="latticecount", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, lv=True):
        sp.add_argument("file")
        sp.add_argument("--method", default="brion", choices=["brion", "lv", "barvinok", "barvinok-brion"]
                        if lv else ["brion", "barvinok", "barvinok-brion"])
        sp.add_argument("--xi", help="comma-separated integer direction for --method=lv")
        sp.add_argument("--seed", type=int, help="reserved; every algorithm is deterministic")

    common(sub.add_parser("count", help="count lattice points"))
    common(sub.add_parser("genfun", help="print the generating function, one term per line"))
    sp = sub.add_parser("decompose", help="Barvinok decomposition of a simplicial cone")
    sp.add_argument("file")
    sp.add_argument("--box", help="lo1,hi1,lo2,hi2,... box for the certificate check")
    sp.add_argument("--seed", type=int, help="reserved; unused")
    sp = sub.add_parser("ehrhart", help="Ehrhart values and quasipolynomial")
    common(sp, lv=False)
    sp.add_argument("--tmax", type=int, default=5)
    return p


COMMANDS = {"count": cmd_count, "genfun": cmd_genfun,
            "decompose": cmd_decompose, "ehrhart": cmd_ehrhart}


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        COMMANDS[args.command](args, out)
    except (ParseError, OSError) as e:
        print("parse error: %s" % e, file=err)
        return EXIT_PARSE
    except PreconditionError as e:
        print("error: %s" % e, file=err)
        return EXIT_PRECONDITION
    except InvariantError as e:
        print("internal error: %s" % e, file=err)
        return EXIT_INTERNAL
    return 0


if __name__ == "__main__":
    sys.exit(main())
