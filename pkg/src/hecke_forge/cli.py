"""Command-line surface: compute, verify, export.

Subcommands mirror the module layout: epoly/rogers/hermite (rank-one
families), spherical (A1/A2 p-adic layer), whittaker, hall, poincare,
looijenga, bessel-check and the named verify suites.  Output is printed in
canonical exponent-ascending order so identical configurations produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys

from .scalars import Scalar
from .laurent import LaurentPoly
from . import affsym, aha, bessel, daha1, nilspinor, rootsys

SCHEMA = 1


def _emit_poly(lp, fmt, out):
    if fmt == "json":
        terms = []
        for e in lp.support():
            key = list(e) if isinstance(e, tuple) else e
            terms.append({"exponent": key, "coeff": lp.c[e].serialize()})
        json.dump({"schema": SCHEMA, "variable": lp.var, "terms": terms}, out)
        out.write("\n")
    elif fmt == "tsv":
        out.write(lp.serialize() + "\n")
    else:
        out.write(repr(lp) + "\n")


def _emit_value(payload, fmt, out):
    if fmt == "json":
        json.dump({"schema": SCHEMA, **payload}, out)
        out.write("\n")
    else:
        for key, val in payload.items():
            out.write("%s\t%s\n" % (key, val))


def cmd_epoly(args, out):
    n = args.n
    if args.limit == "t0":
        poly = daha1.qhermite_bar(n)
    elif args.limit == "tinf":
        poly = daha1.tilde_E(n)
    elif args.limit == "q0":
        poly = daha1.espherical_q0(n)
    elif args.spherical:
        poly = daha1.espherical(n)
    else:
        poly = daha1.epoly(n)
    _emit_poly(poly, args.format, out)
    return 0


def cmd_rogers(args, out):
    _emit_poly(daha1.rogers(args.n, "closed"), args.format, out)
    return 0


def cmd_hermite(args, out):
    _emit_poly(daha1.qhermite_bar(args.n), args.format, out)
    return 0


def cmd_spherical(args, out):
    if args.rank == "A1":
        m = int(args.weight[0])
        poly = aha.spherical_phi(m, args.method)
    else:
        b = tuple(int(x) for x in args.weight)
        poly = aha.hall_littlewood_A2(b)
    _emit_poly(poly, args.format, out)
    return 0


def cmd_whittaker(args, out):
    om = nilspinor.whittaker_omega(args.order)
    if args.symmetric:
        om = nilspinor.whittaker_symmetrized(args.order)
    rows = []
    for m in range(args.order + 1):
        for comp in (1, 2):
            lp = om.component(comp, m)
            rows.append((m, comp, lp))
    if args.format == "json":
        payload = []
        for m, comp, lp in rows:
            payload.append({"m": m, "component": comp,
                            "poly": lp.serialize()})
        json.dump({"schema": SCHEMA, "order": args.order, "rows": payload}, out)
        out.write("\n")
    else:
        for m, comp, lp in rows:
            out.write("m=%d comp=%d\t%r\n" % (m, comp, lp))
    return 0


def cmd_hall(args, out):
    cfg = affsym.JacksonConfig(q0=args.q, t0=args.t, xi=complex(args.xi),
                               cutoff=args.cutoff, tol=args.tol)
    res = affsym.hall_function(args.index, cfg, args.level)
    _emit_value(res.as_dict(), args.format, out)
    return 0


def cmd_poincare(args, out):
    rs = rootsys.get_rs(args.rank)
    if args.affine:
        val = rootsys.affine_poincare_rational(rs)
        _emit_value({"series": repr(val)}, args.format, out)
    else:
        coeffs = rs.poincare_poly()
        _emit_value({"coeffs": [coeffs.get(i, 0)
                                for i in range(max(coeffs) + 1)]},
                    args.format, out)
    return 0


def cmd_looijenga(args, out):
    rs = rootsys.get_rs(args.rank)
    dims = {l: rootsys.looijenga_dim(rs, l)
            for l in range(1, args.max_level + 1)}
    if args.format == "json":
        json.dump({"schema": SCHEMA,
                   "dims": [{"level": l, "dim": d} for l, d in dims.items()]},
                  out)
        out.write("\n")
    else:
        for l, d in dims.items():
            out.write("%d\t%d\n" % (l, d))
    return 0


def cmd_enumerate(args, out):
    rs = rootsys.get_rs(args.rank)
    counts = rootsys.enumerate_by_length(rs, args.max_length)
    for l in range(args.max_length + 1):
        row = {"length": l, "count": counts.get(l, 0)}
        if args.format == "json":
            json.dump(row, out)
            out.write("\n")
        else:
            out.write("%d\t%d\n" % (l, counts.get(l, 0)))
    return 0


def cmd_bessel_check(args, out):
    rep = bessel.master_formula_check(args.kind, args.k, args.lam, args.mu)
    payload = {"kind": rep["kind"],
               "lhs": [rep["lhs"].real, rep["lhs"].imag],
               "rhs": [rep["rhs"].real, rep["rhs"].imag],
               "rel_err": rep["rel_err"]}
    _emit_value(payload, args.format, out)
    return 0 if rep["rel_err"] < args.tol else 1


def cmd_verify(args, out):
    suite = args.suite
    failures = []
    if suite == "nil-daha":
        failures = nilspinor.nildaha_relations_check(5)
    elif suite == "whittaker-intertwine":
        failures = nilspinor.intertwine_check(args.order)
    elif suite == "symmetrizer":
        for m in range(1, args.M + 1):
            if not affsym.phat_equals_sigma(m):
                failures.append(("Phat != Sigma", m))
    elif suite == "daha-relations":
        failures = daha1.daha_relations_report(6) \
            + daha1.sigma_images_report(6)
    elif suite == "rational-daha":
        failures = bessel.rational_daha_relations_check(6) \
            + bessel.trig_conjugation_check()
    elif suite == "spinor-dunkl":
        failures = bessel.trig_spinor_dunkl_commutativity(2)
    else:
        out.write("unknown suite %r\n" % suite)
        return 2
    if failures:
        for f in failures:
            out.write("FAIL %s\n" % (f,))
        return 1
    out.write("ok\n")
    return 0


def build_parser():
    p = argparse.ArgumentParser(
        prog="hecke-forge",
        description="exact and numeric engine for rank-one DAHA special "
                    "functions")
    p.add_argument("--format", choices=("text", "json", "tsv"),
                   default="text")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("epoly", help="nonsymmetric Macdonald polynomial")
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("--spherical", action="store_true")
    sp.add_argument("--limit", choices=("t0", "tinf", "q0"))
    sp.set_defaults(fn=cmd_epoly)

    sp = sub.add_parser("rogers", help="Rogers polynomial")
    sp.add_argument("-n", type=int, required=True)
    sp.set_defaults(fn=cmd_rogers)

    sp = sub.add_parser("hermite", help="continuous q-Hermite polynomial")
    sp.add_argument("-n", type=int, required=True)
    sp.set_defaults(fn=cmd_hermite)

    sp = sub.add_parser("spherical", help="p-adic spherical function")
    sp.add_argument("--rank", choices=("A1", "A2"), default="A1")
    sp.add_argument("--weight", nargs="+", required=True)
    sp.add_argument("--method", choices=("pieri", "closed"), default="closed")
    sp.set_defaults(fn=cmd_spherical)

    sp = sub.add_parser("whittaker", help="spinor q-Whittaker coefficients")
    sp.add_argument("--order", type=int, default=6)
    sp.add_argument("--symmetric", action="store_true")
    sp.set_defaults(fn=cmd_whittaker)

    sp = sub.add_parser("hall", help="affine Hall function (numeric)")
    sp.add_argument("--level", type=int, default=1)
    sp.add_argument("--index", type=int, default=0)
    sp.add_argument("--q", type=float, default=0.3)
    sp.add_argument("--t", type=float, default=2.0)
    sp.add_argument("--xi", default="0.11+0.07j")
    sp.add_argument("--cutoff", type=int, default=40)
    sp.add_argument("--tol", type=float, default=1e-10)
    sp.set_defaults(fn=cmd_hall)

    sp = sub.add_parser("poincare", help="Poincare series")
    sp.add_argument("--affine", action="store_true")
    sp.add_argument("--rank", choices=("A1", "A2"), default="A1")
    sp.set_defaults(fn=cmd_poincare)

    sp = sub.add_parser("looijenga", help="Looijenga space dimensions")
    sp.add_argument("--rank", choices=("A1", "A2"), default="A1")
    sp.add_argument("--max-level", type=int, default=12)
    sp.set_defaults(fn=cmd_looijenga)

    sp = sub.add_parser("enumerate", help="length enumeration table")
    sp.add_argument("--rank", choices=("A1", "A2"), default="A1")
    sp.add_argument("--max-length", type=int, default=12)
    sp.set_defaults(fn=cmd_enumerate)

    sp = sub.add_parser("bessel-check", help="master formula verification")
    sp.add_argument("--kind", required=True)
    sp.add_argument("--k", type=float, default=0.3)
    sp.add_argument("--lambda", dest="lam", type=float, default=0.5)
    sp.add_argument("--mu", type=float, default=0.7)
    sp.add_argument("--tol", type=float, default=1e-8)
    sp.set_defaults(fn=cmd_bessel_check)

    sp = sub.add_parser("verify", help="run a named invariant suite")
    sp.add_argument("suite")
    sp.add_argument("--order", type=int, default=6)
    sp.add_argument("--M", type=int, default=8)
    sp.set_defaults(fn=cmd_verify)

    return p


def dispatch(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 2
    try:
        return args.fn(args, out)
    except (ArithmeticError, ValueError, ZeroDivisionError) as exc:
        out.write("error: %s\n" % exc)
        return 1


def main():
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
