"""Command-line entry point.

Exit codes:
  0  success
  1  usage error
  2  invalid mathematical input (or input beyond desk scale)
  3  a property failed during a sweep
  4  analyze found no valid (D, z) context for the given (x, y, p)
"""

import argparse
import sys

from . import harness
from .errors import InvalidInputError, InvariantViolation, NoValidContextError

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_PROPERTY, EXIT_NO_CONTEXT = 0, 1, 2, 3, 4

EPILOG = """\
exit codes: 0 success, 1 usage error, 2 invalid mathematical input,
3 property failure (sweep), 4 no valid (D, z) context (analyze).
environment: FERMAT_RRP_MAX_BOUND (default 200) caps --bound;
FERMAT_RRP_MAX_COFACTOR_BITS (default 128) caps composite cofactors
left after trial division when factoring norms.
"""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _int_list(text):
    return [int(part) for part in text.split(",") if part.strip()]


def build_parser():
    parser = _Parser(
        prog="fermat-rrp",
        description="Frey curve toolkit for x^r + y^r = D z^p.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--json-out", metavar="PATH", help="write the JSON report here instead of stdout")

    p = sub.add_parser("analyze", help="full report for one (x, y, p)")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--y", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--D", type=int)
    p.add_argument("--z", type=int)
    common(p)

    p = sub.add_parser("contexts", help="list (D, z) with x^r + y^r = D z^p")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--y", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    common(p)

    p = sub.add_parser("fixture-type2", help="pair with v_r(x + y) = pk - 1")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    common(p)

    p = sub.add_parser("search", help="brute-force search for primitive solutions")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--D", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--bound", type=int, required=True)
    common(p)

    p = sub.add_parser("sweep", help="run property checks over many (r, x, y)")
    p.add_argument("--r", type=_int_list, default=[], help="comma-separated list, e.g. 7,11,13")
    p.add_argument("--bound", type=int, default=15)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument(
        "--checks",
        type=lambda s: tuple(c for c in s.split(",") if c),
        default=harness.PAIR_CHECKS,
        help="subset of " + ",".join(harness.PAIR_CHECKS),
    )
    common(p)
    return parser


def _emit(data, path):
    text = harness.to_json(data)
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        if args.command == "analyze":
            data = harness.cmd_analyze(args.r, args.x, args.y, args.p, args.D, args.z)
        elif args.command == "contexts":
            data = harness.contexts_report(args.r, args.x, args.y, args.p)
        elif args.command == "fixture-type2":
            data = harness.fixture_report(args.r, args.p, args.k, args.seed)
        elif args.command == "search":
            data = harness.search_report(args.r, args.D, args.p, args.bound)
        else:
            unknown = set(args.checks) - set(harness.PAIR_CHECKS)
            if unknown:
                print(f"unknown checks: {sorted(unknown)}", file=sys.stderr)
                return EXIT_USAGE
            data = harness.cmd_sweep(args.r, args.bound, args.checks, args.workers)
    except NoValidContextError as exc:
        print(f"no valid context: {exc}", file=sys.stderr)
        return EXIT_NO_CONTEXT
    except InvalidInputError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except InvariantViolation as exc:
        print(f"property failure: {exc}", file=sys.stderr)
        return EXIT_PROPERTY
    _emit(data, args.json_out)
    if args.command == "sweep" and not data["ok"]:
        return EXIT_PROPERTY
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
