"""Command-line front end.

Subcommands expose each computation plus the verification pipeline; output
is byte-identical across runs for fixed arguments and seed.  Exit codes:
0 success, 1 failed verification, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import chebyshev
from .assembly import (
    DEFAULT_SEED,
    basis_to_trace,
    deg0_basis,
    deg0_degree,
    degk_orbits,
    orbit_partner,
    verify_theorem,
)
from .charvariety import TorusKnotConfig, admissible_pairs, components
from .skein import AnnularTangle, BudgetError, PlanarityError, resolve
from .traces import trace_word


def _config(args) -> TorusKnotConfig:
    return TorusKnotConfig(args.p, args.q)


def cmd_chebyshev(args) -> int:
    print(chebyshev(args.n))
    return 0


def cmd_char_variety(args) -> int:
    cfg = _config(args)
    comps = components(cfg)
    if args.json:
        print(json.dumps([c.to_json() for c in comps], indent=2, sort_keys=True))
        return 0
    pairs = admissible_pairs(cfg)
    print(f"character variety of the ({cfg.p},{cfg.q}) torus-knot group:")
    print("  1 abelian line, parametrized by s -> (T_p(s), T_q(s), T_(p+q)(s))")
    print(f"  {len(pairs)} irreducible line(s):")
    for comp in comps:
        if comp.pair is None:
            continue
        print(f"    pair (k={comp.pair.k}, l={comp.pair.l}): "
              f"x = {comp.x_const!r}, y = {comp.y_const!r}")
    return 0


def cmd_trace_poly(args) -> int:
    print(trace_word(args.i, args.j))
    return 0


def cmd_bracket(args) -> int:
    with open(args.file) as fh:
        tangle = AnnularTangle.from_json(json.load(fh))
    el = resolve(tangle, budget=args.budget)
    if args.json:
        print(json.dumps(el.to_json(), indent=2, sort_keys=True))
    else:
        print(el)
    return 0


def cmd_skein_basis(args) -> int:
    cfg = _config(args)
    if args.degree == 0:
        bound = args.bound if args.bound is not None else 4 * cfg.p * cfg.q
        basis = deg0_basis(cfg, bound)
        if args.json:
            print(json.dumps(
                [{"m1": b.m1, "n": b.n, "m2": b.m2,
                  "degree": deg0_degree(b, cfg),
                  "trace": str(basis_to_trace(b, cfg))} for b in basis],
                indent=2, sort_keys=True))
            return 0
        print(f"degree-0 basis of the ({cfg.p},{cfg.q}) skein module, "
              f"leading degree <= {bound}:")
        for b in basis:
            print(f"  x^{b.m1} P^{b.n} y^{b.m2}  (degree {deg0_degree(b, cfg)})  "
                  f"-> {basis_to_trace(b, cfg)}")
        return 0
    orbits = degk_orbits(cfg, args.degree)
    if args.json:
        print(json.dumps(
            [{"k": o.k, "j1": o.j1, "j2": o.j2,
              "partner": list(orbit_partner(o, cfg)),
              "trace": str(basis_to_trace(o, cfg))} for o in orbits],
            indent=2, sort_keys=True))
        return 0
    print(f"degree-{args.degree} basis orbits for ({cfg.p},{cfg.q}): "
          f"{len(orbits)} orbit(s)")
    for o in orbits:
        print(f"  {{({o.j1},{o.j2}), {orbit_partner(o, cfg)}}} "
              f"-> {basis_to_trace(o, cfg)}")
    return 0


def cmd_verify(args) -> int:
    cfg = _config(args)
    report = verify_theorem(cfg, max_k=args.max_k, seed=args.seed)
    if args.no_timings:
        for c in report.checks:
            c["ms"] = 0.0
    if args.json:
        print(report.json_str())
        return 0 if report.all_passed else 1
    print(f"verification for (p, q) = ({cfg.p}, {cfg.q}), "
          f"max_k = {args.max_k}, seed = {args.seed}")
    for c in report.checks:
        mark = "PASS" if c["pass"] else "FAIL"
        print(f"  [{mark}] {c['name']} ({c['ms']:.1f} ms)")
        if not c["pass"]:
            print(f"         witness: {c['witness']}")
    print("all checks passed" if report.all_passed else "verification FAILED")
    return 0 if report.all_passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="torusskein",
        description="Exact skein-module computations for torus-knot complements.")
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("chebyshev", help="print T_n in the variable s")
    s.add_argument("n", type=int)
    s.set_defaults(fn=cmd_chebyshev)

    s = sub.add_parser("char-variety", help="components of the character variety")
    s.add_argument("p", type=int)
    s.add_argument("q", type=int)
    s.add_argument("--json", action="store_true")
    s.set_defaults(fn=cmd_char_variety)

    s = sub.add_parser("trace-poly", help="tr(u^i v^j) in the coordinates x, y, z")
    s.add_argument("i", type=int)
    s.add_argument("j", type=int)
    s.set_defaults(fn=cmd_trace_poly)

    s = sub.add_parser("bracket", help="resolve an annular tangle from a JSON file")
    s.add_argument("file")
    s.add_argument("--json", action="store_true")
    s.add_argument("--budget", type=int, default=22,
                   help="crossing budget for the exact state sum")
    s.set_defaults(fn=cmd_bracket)

    s = sub.add_parser("skein-basis", help="graded basis indices and trace functions")
    s.add_argument("p", type=int)
    s.add_argument("q", type=int)
    s.add_argument("--degree", type=int, required=True, metavar="K")
    s.add_argument("--bound", type=int, default=None,
                   help="leading-degree bound for degree 0 (default 4pq)")
    s.add_argument("--json", action="store_true")
    s.set_defaults(fn=cmd_skein_basis)

    s = sub.add_parser("verify", help="run the full instance verification")
    s.add_argument("p", type=int)
    s.add_argument("q", type=int)
    s.add_argument("--max-k", type=int, default=2, dest="max_k")
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)
    s.add_argument("--json", action="store_true")
    s.add_argument("--no-timings", action="store_true", dest="no_timings",
                   help="zero the ms fields for byte-reproducible output")
    s.set_defaults(fn=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, OSError, BudgetError, PlanarityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
