"""Command-line front end.

Exit codes: 0 success (for eq/oracle-eq: terms equal), 1 unequal terms or a
failed fuzz run, 2 usage/parse/type errors, 3 internal invariant violation.
"""

import argparse
import json
import sys

from .core import infer_tm, parse_tm, print_tm
from .errors import FuelExhausted, GlueError, IllTyped, ParseError
from .fuzz import format_summary, run_suite
from .nbe import def_eq, nf
from .normal import nf_to_json, readback_nf
from .oracle import RewriteTrace, naive_nf, oracle_eq, trace_to_json
from .signature import parse_ctx, parse_signature, print_ty, sig0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="glue",
        description="Normalization by evaluation for free lambda-theories.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_inputs(p, terms):
        p.add_argument("-s", "--signature", required=True, help="signature file")
        p.add_argument("-c", "--context", required=True, help="context literal")
        for flag in terms:
            p.add_argument(flag, required=True, help="term literal")

    check = sub.add_parser("check", help="infer the type of a term")
    with_inputs(check, ["-t"])

    norm = sub.add_parser("norm", help="print the normal form of a term")
    with_inputs(norm, ["-t"])
    norm.add_argument("--json", action="store_true", help="emit the normal form as JSON")

    eq = sub.add_parser("eq", help="decide definitional equality via nbe")
    with_inputs(eq, ["-t1", "-t2"])

    oeq = sub.add_parser("oracle-eq", help="decide definitional equality via rewriting")
    with_inputs(oeq, ["-t1", "-t2"])
    oeq.add_argument(
        "--trace", action="store_true", help="dump rewrite traces as JSON on stderr"
    )

    fuzz = sub.add_parser("fuzz", help="run the property suites")
    fuzz.add_argument("-s", "--signature", help="signature file (default: built-in)")
    fuzz.add_argument("--seed", type=int, default=0)
    fuzz.add_argument("--count", type=int, default=1000)
    fuzz.add_argument("--max-size", type=int, default=30)
    fuzz.add_argument("--max-depth", type=int, default=3)
    return parser


def _load_signature(path):
    with open(path, encoding="utf-8") as fh:
        return parse_signature(fh.read())


def _cmd_check(args):
    sig = _load_signature(args.signature)
    ctx = parse_ctx(args.context)
    print(print_ty(infer_tm(sig, ctx, parse_tm(args.t))))
    return 0


def _cmd_norm(args):
    sig = _load_signature(args.signature)
    ctx = parse_ctx(args.context)
    normal = nf(sig, ctx, parse_tm(args.t))
    if args.json:
        print(json.dumps(nf_to_json(normal)))
    else:
        print(print_tm(readback_nf(normal)))
    return 0


def _decide_both(args, trace=False):
    sig = _load_signature(args.signature)
    ctx = parse_ctx(args.context)
    t1, t2 = parse_tm(args.t1), parse_tm(args.t2)
    by_nf = def_eq(sig, ctx, t1, t2)
    if trace:
        traces = {}
        for side, t in (("left", t1), ("right", t2)):
            steps = []
            final = naive_nf(sig, ctx, t, trace=steps)
            traces[side] = trace_to_json(RewriteTrace(tuple(steps), final))
        print(json.dumps(traces), file=sys.stderr)
        by_oracle = traces["left"]["final"] == traces["right"]["final"]
    else:
        by_oracle = oracle_eq(sig, ctx, t1, t2)
    if by_nf != by_oracle:
        print(
            f"internal error: nbe and oracle disagree on {args.t1} vs {args.t2}",
            file=sys.stderr,
        )
        return None, 3
    return by_nf, None


def _cmd_eq(args):
    equal, bug = _decide_both(args)
    if bug is not None:
        return bug
    print("true" if equal else "false")
    return 0 if equal else 1


def _cmd_oracle_eq(args):
    equal, bug = _decide_both(args, trace=args.trace)
    if bug is not None:
        return bug
    print("true" if equal else "false")
    return 0 if equal else 1


def _cmd_fuzz(args):
    sig = _load_signature(args.signature) if args.signature else sig0()
    results = run_suite(
        sig, args.seed, args.count, max_size=args.max_size, max_depth=args.max_depth
    )
    sys.stdout.write(
        format_summary(args.seed, args.count, args.max_size, args.max_depth, results)
    )
    return 0 if all(r.passed for r in results) else 1


_COMMANDS = {
    "check": _cmd_check,
    "norm": _cmd_norm,
    "eq": _cmd_eq,
    "oracle-eq": _cmd_oracle_eq,
    "fuzz": _cmd_fuzz,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ParseError, IllTyped) as exc:
        print(f"glue: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"glue: error: {exc}", file=sys.stderr)
        return 2
    except (FuelExhausted, AssertionError) as exc:
        print(f"glue: internal error: {exc}", file=sys.stderr)
        return 3
    except GlueError as exc:
        print(f"glue: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
