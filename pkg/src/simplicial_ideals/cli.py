"""Command line front end.

Subcommands: ``gens`` (generator listings), ``member`` (membership with an
explanation), ``containment`` and ``containment-sym`` (fast verdicts with
optional brute-force cross checks), ``resurgence`` (exact value, witnesses,
box sweep) and ``verify`` (the claim harness).

Exit codes: 0 success, 1 a verified claim failed, 2 usage error, 3 a
resource budget was exceeded.
"""

import argparse
import json
import sys

from .config import load_config
from .containment import check_containment, check_symbolic_containment, resurgence_report
from .errors import BudgetExceededError, DimensionError, MonomialParseError, ParameterError
from .monomials import Monomial
from .simplicial import (
    SimplicialSpec,
    ordinary_power_min_gens,
    simplicial_ideal,
    symbolic_power,
)
from .verification import SCOPES, results_to_records, run_verification, summary_lines

EXIT_OK = 0
EXIT_CLAIM_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _dumps(payload):
    # insertion-ordered keys, fixed indent: byte-identical across runs
    return json.dumps(payload, indent=2) + "\n"


def _bool_text(value):
    if value is None:
        return "n/a"
    return "true" if value else "false"


def _frac_text(value):
    return None if value is None else str(value)


def _gate_oracle(config, **limits):
    """Refuse brute-force cross checks beyond the configured caps."""
    caps = {"n": ("oracle_n_cap", config.oracle_n_cap),
            "m": ("oracle_m_cap", config.oracle_m_cap),
            "s": ("oracle_m_cap", config.oracle_m_cap),
            "r": ("oracle_r_cap", config.oracle_r_cap)}
    for name, value in limits.items():
        cap_name, cap = caps[name]
        if value > cap:
            raise BudgetExceededError(
                f"oracle request {name}={value} exceeds {cap_name}={cap}; "
                f"raise SIDEAL_{cap_name.upper()} to allow it")


def _cmd_gens(args, config):
    spec = SimplicialSpec(args.n, args.c)
    if args.power is not None:
        ideal = ordinary_power_min_gens(spec, args.power)
        kind, exponent = "power", args.power
    elif args.symbolic is not None:
        ideal = symbolic_power(spec, args.symbolic,
                               max_candidates=config.max_candidates)
        kind, exponent = "symbolic", args.symbolic
    else:
        ideal = simplicial_ideal(spec)
        kind, exponent = "ideal", None
    if config.format == "json":
        payload = {"n": args.n, "c": args.c, "kind": kind, "exponent": exponent,
                   "count": len(ideal.gens), "generators": ideal.to_lists()}
        sys.stdout.write(_dumps(payload))
    else:
        sys.stdout.write(ideal.to_text())
    return EXIT_OK


def _cmd_member(args, config):
    spec = SimplicialSpec(args.n, args.c)
    mono = Monomial.parse(args.monomial, args.n)
    exps = mono.exps
    if args.symbolic is not None:
        m = args.symbolic
        if m < 1:
            raise ParameterError(f"m={m} must be >= 1")
        kind, exponent = "symbolic", m
        # binding constraint: the c coordinates with the smallest exponents
        order = sorted(range(args.n + 1), key=exps.__getitem__)[:args.c]
        subset = sorted(order)
        subset_sum = sum(exps[i] for i in subset)
        member = subset_sum >= m
        detail = {"subset": subset, "subset_sum": subset_sum, "required": m}
        names = ", ".join(f"x{i}" for i in subset)
        if member:
            explain = (f"every {args.c}-subset of variables has exponent sum"
                       f" >= {m} (minimum {subset_sum} on {{{names}}})")
        else:
            explain = f"subset {{{names}}} has exponent sum {subset_sum} < {m}"
    else:
        r = args.power
        if r < 1:
            raise ParameterError(f"r={r} must be >= 1")
        kind, exponent = "power", r
        capped = sum(min(e, r) for e in exps)
        required = (args.n - args.c + 2) * r
        member = capped >= required
        detail = {"capped_degree": capped, "required": required}
        if member:
            explain = f"capped degree {capped} meets required {required}"
        else:
            explain = (f"capped degree {capped} below required {required}"
                       f" (deficit {required - capped})")
    if config.format == "json":
        payload = {"query": {"n": args.n, "c": args.c, "kind": kind,
                             "exponent": exponent, "monomial": str(mono)},
                   "member": member, "detail": detail}
        sys.stdout.write(_dumps(payload))
    else:
        print(_bool_text(member))
        print(explain)
    return EXIT_OK


def _print_verdict(verdict, label, config):
    if config.format == "json":
        payload = {"query": verdict.query, "fast": verdict.fast_path,
                   "oracle": verdict.oracle, "agree": verdict.agree}
        sys.stdout.write(_dumps(payload))
        return
    print(f"query: {label}")
    print(f"fast: {_bool_text(verdict.fast_path)}")
    if verdict.oracle is not None:
        print(f"oracle: {_bool_text(verdict.oracle)}")
        print(f"agree: {_bool_text(verdict.agree)}")


def _cmd_containment(args, config):
    if args.oracle:
        _gate_oracle(config, n=args.n, m=args.m, r=args.r)
    verdict = check_containment(args.n, args.c, args.m, args.r,
                                with_oracle=args.oracle,
                                max_candidates=config.max_candidates)
    label = (f"I^({args.m})({args.n},{args.c})"
             f" in I({args.n},{args.c})^{args.r}")
    _print_verdict(verdict, label, config)
    # the closed form is exact, so any oracle disagreement is a claim failure
    if verdict.agree is False:
        return EXIT_CLAIM_FAILED
    return EXIT_OK


def _cmd_containment_sym(args, config):
    if args.oracle:
        _gate_oracle(config, n=args.n, m=args.m, s=args.s)
    verdict = check_symbolic_containment(args.n, args.c, args.d, args.m,
                                         args.s, with_oracle=args.oracle,
                                         max_candidates=config.max_candidates)
    label = (f"I^({args.m})({args.n},{args.c})"
             f" in I^({args.s})({args.n},{args.d})")
    _print_verdict(verdict, label, config)
    # fast path is sufficient only; fast=false with oracle=true is expected
    return EXIT_OK


def _cmd_resurgence(args, config):
    box = tuple(args.box) if args.box else None
    if box and box[0] * box[1] > config.max_candidates:
        raise BudgetExceededError(
            f"box {box[0]}x{box[1]} exceeds max_candidates={config.max_candidates}")
    if args.witnesses < 0:
        raise ParameterError(f"--witnesses must be >= 0, got {args.witnesses}")
    report = resurgence_report(args.n, args.c, witness_count=args.witnesses,
                               box=box)
    if config.format == "json":
        payload = {
            "n": report.n, "c": report.c, "rho": _frac_text(report.rho),
            "witnesses": [[k, m, r, _frac_text(ratio)]
                          for k, m, r, ratio in report.witnesses],
            "box": list(report.box) if report.box else None,
            "empirical_sup": _frac_text(report.empirical_sup),
            "empirical_argmax": (list(report.empirical_argmax)
                                 if report.empirical_argmax else None),
        }
        sys.stdout.write(_dumps(payload))
        return EXIT_OK
    print(f"rho(I({report.n},{report.c})) = {report.rho}")
    if report.witnesses:
        print("witnesses (noncontained, ratio -> rho):")
        for k, m, r, ratio in report.witnesses:
            print(f"  k={k}  m={m}  r={r}  ratio={ratio}")
    if report.box:
        where = report.empirical_argmax
        if report.empirical_sup is None:
            print(f"box m <= {report.box[0]}, r <= {report.box[1]}: "
                  "no noncontained pairs")
        else:
            print(f"box m <= {report.box[0]}, r <= {report.box[1]}: "
                  f"sup {report.empirical_sup} at m={where[0]}, r={where[1]}")
    return EXIT_OK


def _cmd_verify(args, config):
    results = run_verification(args.scope, deep=config.deep)
    records = results_to_records(results, include_times=args.timings)
    failed = sum(1 for res in results if res.status != "pass")
    payload = {"scope": args.scope, "deep": config.deep,
               "passed": len(results) - failed, "failed": failed,
               "claims": records}
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(_dumps(payload))
    if config.format == "json":
        sys.stdout.write(_dumps(payload))
    else:
        for line in summary_lines(results, include_times=args.timings):
            print(line)
        if args.report:
            print(f"report written to {args.report}")
    return EXIT_OK if failed == 0 else EXIT_CLAIM_FAILED


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=None,
                        help="output format (default text)")
    common.add_argument("--config", default=None, metavar="PATH",
                        help="config file of key = value lines")
    common.add_argument("--max-candidates", type=int, default=None,
                        metavar="N", help="enumeration budget")
    common.add_argument("--max-intersection-gens", type=int, default=None,
                        metavar="N", help="intersection budget")

    parser = argparse.ArgumentParser(
        prog="sideal",
        description="skeleton ideals of the coordinate simplex: generators, "
                    "powers, containments, resurgence")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gens", parents=[common],
                       help="list minimal generators")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    which = p.add_mutually_exclusive_group()
    which.add_argument("--power", type=int, metavar="R",
                       help="ordinary power I^R")
    which.add_argument("--symbolic", type=int, metavar="M",
                       help="symbolic power I^(M)")
    p.set_defaults(handler=_cmd_gens)

    p = sub.add_parser("member", parents=[common],
                       help="membership test with the binding constraint")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--power", type=int, metavar="R")
    which.add_argument("--symbolic", type=int, metavar="M")
    p.add_argument("monomial", help="e.g. 'x0^2*x1' or '1'")
    p.set_defaults(handler=_cmd_member)

    p = sub.add_parser("containment", parents=[common],
                       help="is I^(m)(n,c) inside I(n,c)^r?")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--oracle", action="store_true",
                   help="cross-check against the generator sweep")
    p.set_defaults(handler=_cmd_containment)

    p = sub.add_parser("containment-sym", parents=[common],
                       help="is I^(m)(n,c) inside I^(s)(n,d)?")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--oracle", action="store_true")
    p.set_defaults(handler=_cmd_containment_sym)

    p = sub.add_parser("resurgence", parents=[common],
                       help="exact resurgence with optional evidence")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--witnesses", type=int, default=0, metavar="K",
                   help="print witness pairs for k = 1..K")
    p.add_argument("--box", type=int, nargs=2, metavar=("M", "R"),
                   help="scan the m x r box for the empirical supremum")
    p.set_defaults(handler=_cmd_resurgence)

    p = sub.add_parser("verify", parents=[common],
                       help="run the registered claim suite")
    p.add_argument("scope", choices=SCOPES)
    p.add_argument("--deep", action=argparse.BooleanOptionalAction,
                   default=None, help="widen every sweep")
    p.add_argument("--report", default=None, metavar="PATH",
                   help="also write the JSON report here")
    p.add_argument("--timings", action="store_true",
                   help="include wall-clock (breaks byte-identical output)")
    p.set_defaults(handler=_cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = load_config(
            config_path=args.config,
            overrides={"format": args.format,
                       "max_candidates": args.max_candidates,
                       "max_intersection_gens": args.max_intersection_gens,
                       "deep": getattr(args, "deep", None)})
        return args.handler(args, config)
    except (ParameterError, MonomialParseError, DimensionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceededError as exc:
        print(f"resource budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


def entry():
    sys.exit(main())
