"""Command-line entry point and JSON reporting.

Subcommands: ``identities``, ``algebra``, ``surjection``, ``omega``,
``verma``, ``all``.  Exit status: 0 all checks passed, 1 some check failed,
2 usage/configuration error, 3 internal error.  Rationals are passed and
printed as exact "p/q" strings.  A JSON config file can preset any flag
(command-line flags win).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import reports

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


def _int_list(text: str):
    return tuple(int(x) for x in text.split(",") if x != "")


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON file presetting flag values")
    common.add_argument("--output", help="write the JSON report to this path")
    p = argparse.ArgumentParser(
        prog="zhualg",
        description="Exact computer algebra for graded associative "
                    "quotients of vertex operator algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("identities", parents=[common],
                        help="symbolic combinatorial identity suite")
    sp.add_argument("--max-n", type=int, default=8,
                    help="one-variable identity range (default 8)")
    sp.add_argument("--max-n-twovar", type=int, default=6,
                    help="two-variable identity range (default 6)")

    sp = sub.add_parser("algebra", parents=[common],
                        help="structure certificates for the level-n "
                             "products")
    sp.add_argument("--backend", default="heisenberg",
                    choices=["heisenberg", "virasoro"])
    sp.add_argument("--c", default=None,
                    help="central charge (virasoro), e.g. 1/2")
    sp.add_argument("--n", default="0,1,2", type=_int_list,
                    help="comma-separated levels (default 0,1,2)")
    sp.add_argument("--weight-cap", type=int, default=3)
    sp.add_argument("--slack", type=int, default=4)

    sp = sub.add_parser("surjection", parents=[common],
                        help="level-descent certificates")
    sp.add_argument("--backend", default="heisenberg",
                    choices=["heisenberg", "virasoro"])
    sp.add_argument("--c", default=None)
    sp.add_argument("--n", default="1,2", type=_int_list)
    sp.add_argument("--window", type=int, default=12)
    sp.add_argument("--slack", type=int, default=4)
    sp.add_argument("--weight-cap", type=int, default=3)

    sp = sub.add_parser("omega", parents=[common],
                        help="lowest-weight subspace windows and module "
                             "action checks")
    sp.add_argument("--h", default="0,1,2/3",
                    help="comma-separated highest weights (default "
                         "0,1,2/3)")
    sp.add_argument("--n", default="0,1", type=_int_list)
    sp.add_argument("--weight-cap", type=int, default=3)
    sp.add_argument("--depth-cap", type=int, default=5)

    sp = sub.add_parser("verma", parents=[common],
                        help="induced module, radical, and input recovery")
    sp.add_argument("--backend", default="heisenberg",
                    choices=["heisenberg"])
    sp.add_argument("--n", type=int, default=0)
    sp.add_argument("--h", default="2/3")
    sp.add_argument("--degree-cap", type=int, default=None)
    sp.add_argument("--ann-cap", type=int, default=None)
    sp.add_argument("--headroom", type=int, default=None)
    sp.add_argument("--no-stability-probe", action="store_true")

    sub.add_parser("all", parents=[common],
                   help="the full default suite")
    return p


def _apply_config_file(parser, argv):
    """Inject config-file values as defaults before final parsing."""
    pre, _ = parser.parse_known_args(argv)
    if not getattr(pre, "config", None):
        return argv
    try:
        with open(pre.config) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        parser.error("cannot read config file: %s" % exc)
    extra = []
    for key, val in sorted(data.items()):
        flag = "--" + key.replace("_", "-")
        if any(a == flag or a.startswith(flag + "=") for a in argv):
            continue          # explicit flags win
        if isinstance(val, bool):
            if val:
                extra.append(flag)
        else:
            extra.extend([flag, str(val)])
    # insert after the subcommand
    return argv + extra


def dispatch(args):
    if args.command == "identities":
        recs = reports.identities_report(args.max_n, args.max_n_twovar)
        config = {"max_n": args.max_n, "max_n_twovar": args.max_n_twovar}
    elif args.command == "algebra":
        recs = reports.algebra_report(args.backend, args.c, args.n,
                                      args.weight_cap, args.slack)
        config = {"backend": args.backend, "c": args.c,
                  "n": list(args.n), "weight_cap": args.weight_cap,
                  "slack": args.slack}
    elif args.command == "surjection":
        recs = reports.surjection_report(args.backend, args.c, args.n,
                                         args.window, args.slack,
                                         args.weight_cap)
        config = {"backend": args.backend, "c": args.c,
                  "n": list(args.n), "window": args.window,
                  "slack": args.slack, "weight_cap": args.weight_cap}
    elif args.command == "omega":
        hs = tuple(x for x in args.h.split(",") if x)
        recs = reports.omega_report(hs, args.n, args.weight_cap,
                                    args.depth_cap)
        config = {"h": list(hs), "n": list(args.n),
                  "weight_cap": args.weight_cap,
                  "depth_cap": args.depth_cap}
    elif args.command == "verma":
        recs = reports.verma_report(
            args.backend, args.h, args.n, D=args.degree_cap,
            ann_cap=args.ann_cap, headroom=args.headroom,
            stability_probe=not args.no_stability_probe)
        config = {"backend": args.backend, "h": args.h, "n": args.n,
                  "degree_cap": args.degree_cap, "ann_cap": args.ann_cap,
                  "headroom": args.headroom,
                  "stability_probe": not args.no_stability_probe}
    else:
        recs = reports.all_report()
        config = {"defaults": True}
    return reports.assemble(args.command, config, recs)


def summarize(report, stream):
    for rec in report["checks"]:
        verdict = "PASS" if rec["passed"] else "FAIL"
        stream.write("[%s] %s  %s\n"
                     % (verdict, rec["name"],
                        json.dumps(rec["parameters"], sort_keys=True)))
    stream.write("%s: %d checks, %s\n"
                 % (report["command"], len(report["checks"]),
                    "all passed" if report["passed"] else "FAILURES"))


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    argv = _apply_config_file(parser, argv)
    args = parser.parse_args(argv)
    try:
        report = dispatch(args)
    except (ValueError, AssertionError) as exc:
        sys.stderr.write("internal check violation: %s\n" % exc)
        return EXIT_INTERNAL
    text = json.dumps(report, indent=2, sort_keys=False)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    summarize(report, sys.stdout)
    return EXIT_OK if report["passed"] else EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
