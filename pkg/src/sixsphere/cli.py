"""Command-line front end.

Subcommands:
  verify     run one verification suite (or all of them) and report
  degree     run the mapping-degree engine on a named map
  companion  companion octonion of an 8x8 special-orthogonal matrix
  chern      the graded Chern-class pipeline with its derivation trace
  homotopy   homotopy-group bookkeeping for the structure spaces
  recover    recover x from a serialized 6x6 complex-structure matrix

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional

import numpy as np

from . import chern, cstruct, degree as deg, homotopy, suites, twistor
from .errors import SixSphereError, UnknownSuite

USAGE_ERROR = 2
FAILURE = 1


def _write_json(payload, path: Optional[str]):
    text = json.dumps(payload, indent=2)
    if path in (None, "-"):
        print(text)
    else:
        with open(path, "w") as fh:
            fh.write(text + "\n")


def _cmd_verify(args) -> int:
    kwargs = dict(mode=args.mode, seed=args.seed, tolerance=args.tol,
                  table=args.table)
    if args.all:
        reports = suites.run_all(samples=args.samples, **kwargs)
    else:
        if not args.suite:
            print("verify: need --suite NAME or --all", file=sys.stderr)
            return USAGE_ERROR
        reports = [suites.run_suite(args.suite, samples=args.samples, **kwargs)]
    payload = [r.to_dict() for r in reports]
    for r in reports:
        status = "pass" if r.ok else "FAIL (%d failures)" % len(r.failures)
        res = "" if r.max_residual is None else "  max residual %.3g" % r.max_residual
        print("suite %-16s mode %-5s samples %-6d checks %-6d %s%s"
              % (r.suite, r.mode, r.samples, r.checked, status, res))
    if args.json:
        _write_json(payload if args.all else payload[0], args.json)
    return 0 if all(r.ok for r in reports) else FAILURE


_MAP_BUILDERS = {
    "identity": deg.identity_map,
    "squaring": deg.squaring_map,
    "conjugation": deg.conjugation_map,
    "theta-circle": deg.theta_circle_map,
    "cylinder-loop": deg.cylinder_loop_map,
    "cylinder-q": lambda: deg.cylinder_loop_map(half_angle=True),
    "rp7-cube": deg.cube_map,
}


def _cmd_degree(args) -> int:
    name = args.map
    cfg = deg.EngineConfig(trials=args.trials)
    if args.starts:
        cfg.n_starts = args.starts
    try:
        if name.startswith("power:"):
            fam = deg.power_map(int(name.split(":", 1)[1]))
            rep = deg.mapping_degree(fam, seed=args.seed, config=cfg)
        elif name == "rp7-cube":
            rep = deg.degree_on_rp7(deg.cube_map(), seed=args.seed, config=cfg)
        elif name in _MAP_BUILDERS:
            rep = deg.mapping_degree(_MAP_BUILDERS[name](), seed=args.seed,
                                     config=cfg)
        else:
            print("degree: unknown map %r (known: %s, power:k)"
                  % (name, ", ".join(sorted(_MAP_BUILDERS))), file=sys.stderr)
            return USAGE_ERROR
    except SixSphereError as e:
        print("degree: %s" % e, file=sys.stderr)
        return FAILURE
    print("map %-14s degree %d  (%d trials, %s preimages)"
          % (rep.name, rep.degree, len(rep.trials),
             "/".join(str(t.n_converged) for t in rep.trials)))
    if args.json:
        _write_json(rep.to_dict(), args.json)
    return 0


def _cmd_companion(args) -> int:
    with open(args.matrix) as fh:
        raw = json.load(fh)
    rows = raw["rows"] if isinstance(raw, dict) else raw
    if any(isinstance(x, str) for row in rows for x in row):
        mat = [[Fraction(str(x)) for x in row] for row in rows]
        lam = twistor.SO7Element(mat)
    else:
        lam = twistor.SO7Element(np.array(rows, dtype=float))
    try:
        res = twistor.companion(lam, tol=args.tol)
    except SixSphereError as e:
        print("companion: %s" % e, file=sys.stderr)
        return FAILURE
    payload = {"a": res.a.to_strings(), "residual": res.residual,
               "kernel_dim": res.kernel_dim}
    _write_json(payload, args.json)
    return 0


def _cmd_chern(args) -> int:
    if not args.lemma22:
        print("chern: only --lemma22 is implemented", file=sys.stderr)
        return USAGE_ERROR
    res = chern.euler_number_normal_bundle()
    if args.json:
        _write_json({"euler_number": res.euler_number,
                     "c1_complement": res.c1_complement.render(),
                     "c2_complement": res.c2_complement.render(),
                     "c2_normal": res.c2_normal.render(),
                     "trace": res.trace}, args.json)
    else:
        for line in res.trace:
            print(line)
        print("euler number: %d" % res.euler_number)
    return 0


def _cmd_homotopy(args) -> int:
    table = homotopy.Pi7Table.from_csv(args.table) if args.table else None
    if args.space == "s6":
        expr = homotopy.pi_structures_s6(args.k, table)
        label = "pi_%d of the structure space of the six-sphere" % args.k
    elif args.space == "xg":
        if args.genus is None:
            print("homotopy: --space xg needs --genus", file=sys.stderr)
            return USAGE_ERROR
        expr = homotopy.pi_structures_xg(args.genus, args.k, table)
        label = ("pi_%d of the structure space of the genus-%d connected sum"
                 % (args.k, args.genus))
    else:
        print("homotopy: unknown space %r" % args.space, file=sys.stderr)
        return USAGE_ERROR
    print("%s: %s" % (label, expr.render()))
    if args.json:
        _write_json({"space": args.space, "k": args.k, "genus": args.genus,
                     "group": expr.render(), "group_ascii": expr.render_ascii(),
                     "symbolic": expr.is_symbolic()}, args.json)
    return 0


def _cmd_recover(args) -> int:
    with open(args.structure) as fh:
        raw = json.load(fh)
    rows = raw["rows"] if isinstance(raw, dict) else raw
    j = cstruct.ComplexStructureR6.from_strings(
        [[str(x) for x in row] for row in rows])
    try:
        x = cstruct.recover_x(j)
    except SixSphereError as e:
        print("recover: %s" % e, file=sys.stderr)
        return FAILURE
    payload = {"x": x.to_strings(),
               "round_trip_distance": cstruct.j_from_octonion(x).distance(j)}
    _write_json(payload, args.json)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="sixsphere",
        description="octonion algebra, complex structures on the six-sphere, "
                    "mapping degrees, and their verification suites")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", help="suite name (see --list)")
    v.add_argument("--all", action="store_true", help="run every suite")
    v.add_argument("--list", action="store_true", help="list suite names")
    v.add_argument("--samples", type=int, default=None)
    v.add_argument("--mode", choices=("exact", "float"), default="exact")
    v.add_argument("--tol", type=float, default=1e-9)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--json", help="write the report to this path ('-' = stdout)")
    v.add_argument("--table", help="CSV of seven-sphere homotopy groups")

    d = sub.add_parser("degree", help="mapping-degree engine")
    d.add_argument("--map", required=True,
                   help="identity|squaring|power:k|conjugation|theta-circle|"
                        "cylinder-loop|cylinder-q|rp7-cube")
    d.add_argument("--trials", type=int, default=3)
    d.add_argument("--seed", type=int, default=0)
    d.add_argument("--starts", type=int, default=None)
    d.add_argument("--json")

    c = sub.add_parser("companion", help="companion octonion of an SO(7) matrix")
    c.add_argument("--matrix", required=True, help="JSON file, 8x8 row-major")
    c.add_argument("--tol", type=float, default=1e-9)
    c.add_argument("--json")

    ch = sub.add_parser("chern", help="graded Chern-class pipeline")
    ch.add_argument("--lemma22", action="store_true",
                    help="run the Euler-number derivation and print the trace")
    ch.add_argument("--json")

    h = sub.add_parser("homotopy", help="homotopy-group bookkeeping")
    h.add_argument("--space", required=True, choices=("s6", "xg"))
    h.add_argument("--k", type=int, required=True)
    h.add_argument("--genus", type=int)
    h.add_argument("--table")
    h.add_argument("--json")

    r = sub.add_parser("recover", help="x from a 6x6 structure matrix")
    r.add_argument("--structure", required=True, help="JSON file, 6x6 row-major")
    r.add_argument("--json")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.command == "verify" and args.list:
        for name in suites.SUITES:
            print(name)
        return 0
    handlers = {"verify": _cmd_verify, "degree": _cmd_degree,
                "companion": _cmd_companion, "chern": _cmd_chern,
                "homotopy": _cmd_homotopy, "recover": _cmd_recover}
    try:
        return handlers[args.command](args)
    except UnknownSuite as e:
        print("error: %s" % e, file=sys.stderr)
        return USAGE_ERROR
    except SixSphereError as e:
        print("error: %s" % e, file=sys.stderr)
        return FAILURE


if __name__ == "__main__":
    sys.exit(main())
