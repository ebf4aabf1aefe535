"""Command line front end.

Every command emits one JSON record on stdout (or to --out) with the
shape {command, n, d, version, payload, checks} and sorted keys, so the
output is byte-identical across runs.  Exit status: 0 on success, 1 when
any check fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from collections import Counter

from . import __version__
from . import spectrum as sp
from . import selfcheck as sc
from .fibpoly import poly_str
from .hmodule import TaftParams
from .ring import (GreenElement, ideal_generator, multiply, radical_basis,
                   radical_generator_check)

_TERM_RE = re.compile(
    r"\s*([+-])?\s*(?:(\d+)\s*\*\s*)?M\(\s*(\d+)\s*,\s*(-?\d+)\s*\)\s*")


def parse_element(text, params):
    """Parse 'M(l,i)' combinations like '2*M(2,0) - M(1,-1) + M(3,2)'.

    Negative i is normalized mod n; raises ValueError on anything else.
    """
    coeffs = Counter()
    pos = 0
    first = True
    while pos < len(text):
        mobj = _TERM_RE.match(text, pos)
        if not mobj or (not first and mobj.group(1) is None):
            raise ValueError(f"cannot parse module expression at {text[pos:]!r}")
        sign = -1 if mobj.group(1) == "-" else 1
        coeff = int(mobj.group(2)) if mobj.group(2) else 1
        l, i = int(mobj.group(3)), int(mobj.group(4))
        if not 1 <= l <= params.d:
            raise ValueError(f"M({l},{i}): l must lie in 1..{params.d}")
        coeffs[(l, i % params.n)] += sign * coeff
        pos = mobj.end()
        first = False
    if first:
        raise ValueError("empty module expression")
    return GreenElement(params, dict(coeffs))


def _record(command, n, d, payload, checks):
    return {"command": command, "n": n, "d": d, "version": __version__,
            "payload": payload, "checks": checks}


def _cplx(z):
    z = complex(z)
    return [z.real, z.imag]


def cmd_present(params):
    payload = {}
    for kind, rank in (("green", params.n * params.d),
                       ("projective", 2 * params.n),
                       ("stable", params.n * (params.d - 1))):
        payload[kind] = {
            "relations": [f"y^{params.n} - 1",
                          poly_str(ideal_generator(params, kind).terms)],
            "rank": rank,
        }
    return _record("present", params.n, params.d, payload, [])


def cmd_mult(params, lhs_text, rhs_text, path):
    lhs = parse_element(lhs_text, params)
    rhs = parse_element(rhs_text, params)
    payload = {"lhs": repr(lhs), "rhs": repr(rhs), "path": path}
    checks = []
    if path in ("poly", "both"):
        payload["product_poly"] = repr(multiply(lhs, rhs, path="poly"))
    if path in ("oracle", "both"):
        payload["product_oracle"] = repr(multiply(lhs, rhs, path="oracle"))
    if path == "both":
        agree = payload["product_poly"] == payload["product_oracle"]
        checks.append({"name": "path_agreement", "pass": agree})
    payload["product"] = payload.get("product_poly", payload.get("product_oracle"))
    return _record("mult", params.n, params.d, payload, checks)


def cmd_table(params):
    cells = list(sc.table_cells(params))
    ok = all(c["agree"] for c in cells)
    payload = {"cells": cells, "cell_count": len(cells)}
    checks = [{"name": "table_agreement", "pass": ok}]
    return _record("table", params.n, params.d, payload, checks)


def cmd_radical(params):
    basis = radical_basis(params)
    square_zero = all(multiply(x, y).is_zero() for x in basis for y in basis)
    payload = {
        "basis": [repr(b) for b in basis],
        "rank": len(basis),
        "expected_rank": params.n - params.m,
    }
    checks = [
        {"name": "radical_rank", "pass": len(basis) == params.n - params.m},
        {"name": "radical_square_zero", "pass": square_zero},
        {"name": "principal_generator", "pass": radical_generator_check(params)},
    ]
    return _record("radical", params.n, params.d, payload, checks)


def cmd_spectrum(params):
    pts = sp.solve_system(params)
    census = sp.block_census(params)
    payload = {
        "solutions": [{"k": pt.k, "j": pt.j, "lambda": _cplx(pt.lam),
                       "mu": _cplx(pt.mu)} for pt in pts],
        "solution_count": len(pts),
        "census": census,
    }
    count_check = sc.check_solution_count(params)
    census_check = sc.check_census(params)
    checks = [{"name": c["name"], "pass": c["pass"]}
              for c in (count_check, census_check)]
    return _record("spectrum", params.n, params.d, payload, checks)


def cmd_selfcheck(pairs, samples):
    records, _ = sc.run_selfcheck(pairs, samples=samples)
    checks = [{"name": f"{rec['name']}:{c['name']}", "pass": c["pass"]}
              for rec in records for c in rec["checks"]]
    passed = sum(1 for c in checks if c["pass"])
    payload = {"records": records, "passed": passed, "total": len(checks)}
    print(f"selfcheck: {passed}/{len(checks)} checks passed", file=sys.stderr)
    if pairs is not None and len(pairs) == 1:
        n, d = pairs[0]
    else:
        n = d = None
    return _record("selfcheck", n, d, payload, checks)


def _table_csv(record):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["l1", "i1", "l2", "i2", "product", "agree"])
    for c in record["payload"]["cells"]:
        writer.writerow([c["l1"], c["i1"], c["l2"], c["i2"],
                         c["product"], c["agree"]])
    return buf.getvalue()


def _parse_int_list(text):
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise ValueError(f"expected a comma-separated list of integers, got {text!r}")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="greenring",
        description="Green ring of the generalized Taft algebra H_{n,d}.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_nd(p):
        p.add_argument("--n", type=int, required=True, help="order of g (n >= 2)")
        p.add_argument("--d", type=int, required=True,
                       help="nilpotency degree of h (d >= 2, d | n)")

    def add_out(p):
        p.add_argument("--out", metavar="FILE", default=None,
                       help="write output to FILE instead of stdout")

    p = sub.add_parser("present", help="print the three ring presentations")
    add_nd(p)
    add_out(p)

    p = sub.add_parser("mult", help="multiply two basis combinations")
    add_nd(p)
    p.add_argument("lhs", help="left factor, e.g. 'M(2,0)' or '2*M(1,1) - M(2,-1)'")
    p.add_argument("rhs", help="right factor")
    p.add_argument("--path", choices=("poly", "oracle", "both"), default="both",
                   help="presentation arithmetic, tensor decomposition, or both")
    add_out(p)

    p = sub.add_parser("table", help="full basis multiplication table, both paths")
    add_nd(p)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    add_out(p)

    p = sub.add_parser("radical", help="Jacobson radical basis and certificates")
    add_nd(p)
    add_out(p)

    p = sub.add_parser("spectrum", help="character solutions and block census")
    add_nd(p)
    add_out(p)

    p = sub.add_parser("selfcheck", help="run the full cross-validation battery")
    p.add_argument("--n", default=None,
                   help="comma-separated n values (default: built-in grid)")
    p.add_argument("--d", default=None,
                   help="comma-separated d values, zipped with --n")
    p.add_argument("--samples", type=int, default=1000,
                   help="random elements per sampling check")
    add_out(p)

    return parser


def _run(args):
    if args.command == "selfcheck":
        if (args.n is None) != (args.d is None):
            raise ValueError("selfcheck needs both --n and --d, or neither")
        pairs = None
        if args.n is not None:
            ns, ds = _parse_int_list(args.n), _parse_int_list(args.d)
            if len(ns) != len(ds):
                raise ValueError("--n and --d lists must have equal length")
            pairs = list(zip(ns, ds))
            for n, d in pairs:
                TaftParams(n, d)
        return cmd_selfcheck(pairs, args.samples)
    params = TaftParams(args.n, args.d)
    if args.command == "present":
        return cmd_present(params)
    if args.command == "mult":
        return cmd_mult(params, args.lhs, args.rhs, args.path)
    if args.command == "table":
        return cmd_table(params)
    if args.command == "radical":
        return cmd_radical(params)
    if args.command == "spectrum":
        return cmd_spectrum(params)
    raise ValueError(f"unknown command {args.command!r}")


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        record = _run(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if getattr(args, "format", "json") == "csv":
        text = _table_csv(record)
    else:
        text = json.dumps(record, indent=2, sort_keys=True) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if all(c["pass"] for c in record["checks"]) else 1


if __name__ == "__main__":
    sys.exit(main())
