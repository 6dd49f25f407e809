"""Command-line front end.

Exit codes: 0 every check passed, 1 a verification failed, 2 usage or
parameter error.
"""

import argparse
import json
import sys
import time

from . import __version__
from .errors import BudgetError, NoSuchRootOfUnity, SearchExhausted, ValidationError
from .family import FamilyParams, build_system, pairs, rank_report
from .verify import (check_lemma1, check_lemma2, check_prop1, check_prop2, default_budget,
                     witness_F, witness_pair)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _int_list(text):
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _add_params(p):
    g = p.add_argument_group("family parameters")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--p", type=int, required=True)
    g.add_argument("--l", type=int, required=True, dest="ell", help="exponent l in p^l")
    g.add_argument("--a", type=int, required=True)
    g.add_argument("--d", type=int, required=True)
    g.add_argument("--b", type=_int_list, required=True, help="b_1,...,b_{n-2}")
    g.add_argument("--c", type=_int_list, required=True, help="c_1,...,c_{n-2}")


def build_parser():
    parser = argparse.ArgumentParser(prog="simptoric", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="emit the F/G/H binomial system and certificates")
    _add_params(c)
    c.add_argument("--format", choices=("json", "text"), default="json")
    c.add_argument("--out", help="write to this file instead of stdout")

    v = sub.add_parser("verify", help="run a verification suite and write a JSON report")
    _add_params(v)
    v.add_argument("--mode", required=True, choices=("char-p", "char-other", "witnesses", "lemmas"))
    v.add_argument("--k", type=_int_list, default=[1], help="extension degrees for char-p mode")
    v.add_argument("--q", type=int, help="field order (prime power, char != p) for char-other/witnesses")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--budget", type=int, default=None,
                   help="max enumerated points (default $SIMPTORIC_BUDGET or 1e8)")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--samples", type=int, default=1000, help="kernel samples for lemma 1")
    v.add_argument("--D", type=int, default=None, help="degree bound for lemma 2 (default 3*max(p^l, a))")
    v.add_argument("--report", default="simptoric_report.json", help="report path")
    v.add_argument("--format", choices=("json", "text"), default="text", help="stdout format")

    r = sub.add_parser("report", help="print the known binomial/arithmetical rank bounds")
    _add_params(r)
    return parser


def _params(args):
    return FamilyParams(args.n, args.p, args.ell, args.a, args.d, tuple(args.b), tuple(args.c))


def _emit(text, path):
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_construct(args):
    system = build_system(_params(args))
    if args.format == "json":
        text = json.dumps(system.to_dict(), indent=2)
    else:
        n = system.params.n
        lines = [f"# {system.params.to_dict()}"]
        lines += [b.pretty(n) for b in system.all()]
        lines.append(f"# certificates: {json.dumps(system.certs.to_dict())}")
        text = "\n".join(lines)
    _emit(text, args.out)
    return EXIT_OK


def _run_checks(args, params):
    mode = args.mode
    budget = args.budget if args.budget is not None else default_budget()
    fields, reports = [], []
    if mode == "char-p":
        fields = [(params.p, k) for k in args.k]
        reports.append(check_prop1(params, args.k, budget, args.jobs).to_dict())
    elif mode == "char-other":
        if args.q is None:
            raise _Usage("--mode char-other needs --q")
        fields = [args.q]
        reports.append(check_prop2(params, args.q, budget, args.jobs).to_dict())
    elif mode == "witnesses":
        if args.q is None:
            raise _Usage("--mode witnesses needs --q")
        fields = [args.q]
        for i in range(1, params.n - 1):
            w = witness_F(params, i, args.q)
            reports.append({"check": f"witness_F[{i}]", "passed": w.ok, "certificate": w.to_dict()})
        for i, j in pairs(params):
            w = witness_pair(params, i, j, args.q)
            reports.append({"check": f"witness_pair[{i},{j}]", "passed": w.ok, "certificate": w.to_dict()})
    else:
        D = args.D if args.D is not None else 3 * max(params.q, params.a)
        reports.append(check_lemma1(params, args.samples, args.seed).to_dict())
        reports.append(check_lemma2(params, D).to_dict())
    manifest = {
        "command": "verify",
        "mode": mode,
        "params": params.to_dict(),
        "fields": fields,
        "seed": args.seed,
        "budget": budget,
        "jobs": args.jobs,
        "outputs": [args.report],
    }
    return manifest, reports


class _Usage(Exception):
    pass


def cmd_verify(args):
    params = _params(args)
    t0 = time.perf_counter()
    manifest, reports = _run_checks(args, params)
    passed = all(r["passed"] for r in reports)
    doc = {"manifest": manifest, "passed": passed, "wall_clock": time.perf_counter() - t0,
           "reports": reports}
    with open(args.report, "w") as fh:
        json.dump(doc, fh, indent=2)
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    else:
        for r in reports:
            print(f"{'PASS' if r['passed'] else 'FAIL'}  {r['check']}")
        print(f"report written to {args.report}")
    return EXIT_OK if passed else EXIT_FAIL


def cmd_report(args):
    params = _params(args)
    build_system(params)  # validates conditions (I)-(III)
    rep = rank_report(params).to_dict()
    rep["manifest"] = {"command": "report", "params": params.to_dict()}
    print(json.dumps(rep, indent=2))
    return EXIT_OK


def main(argv=None):
    args = build_parser().parse_args(argv)
    handler = {"construct": cmd_construct, "verify": cmd_verify, "report": cmd_report}[args.command]
    try:
        return handler(args)
    except ValidationError as exc:
        print(f"invalid parameters: {exc}", file=sys.stderr)
    except BudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
    except NoSuchRootOfUnity as exc:
        print(f"field error: {exc}; choose q with p^l dividing q-1", file=sys.stderr)
    except SearchExhausted as exc:
        print(f"search cap reached: {exc}", file=sys.stderr)
    except (_Usage, ValueError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
