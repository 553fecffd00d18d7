"""Command line entry point: ``ringstrat zn|quad|depth|selftest``."""
import argparse
import sys
import time
from pathlib import Path

from .config import BRUTE_LIMIT_ENV, Limits
from .errors import RingStratError
from .recipe import integer_depth
from .report import render_dot, render_text, run_quad, run_zn
from .verify import sweep_zn


def _add_common(p):
    p.add_argument("--verify", action="store_true", help="also run the brute-force oracle and compare")
    p.add_argument("--focus", help="show only the component containing this element")
    p.add_argument("--dot", metavar="FILE", help="write the semilattice as DOT")
    p.add_argument("--json", metavar="FILE", help="write the structured report as JSON")
    p.add_argument("--max-elems", type=int, default=64, metavar="K", help="truncate element lists at K")
    p.add_argument("--timings", action="store_true", help="include wall-clock timings (not reproducible)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ringstrat",
        description="Semilattice decomposition of the multiplicative semigroup of Z_n and Z[√d]/A.",
        epilog=f"The brute-force size bound can be set with {BRUTE_LIMIT_ENV}.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("zn", help="decompose Z_n")
    p.add_argument("n", type=int)
    _add_common(p)
    p = sub.add_parser("quad", help="decompose Z[√d]/A")
    p.add_argument("d", type=int)
    p.add_argument("--ideal", required=True, help='generators such as "10, 5+5*w" (w = √d)')
    _add_common(p)
    p = sub.add_parser("depth", help="layer index of an integer in Z_(0)")
    p.add_argument("x", type=int)
    p = sub.add_parser("selftest", help="compare recipe and oracle on Z_n for n in [2, N]")
    p.add_argument("--max", dest="upper", type=int, default=300, metavar="N")
    return parser


def _emit(args, doc, decomp, out):
    if args.json:
        Path(args.json).write_text(doc.to_json(), encoding="utf-8")
    if args.dot:
        Path(args.dot).write_text(render_dot(decomp), encoding="utf-8")
    out.write(render_text(doc))


def run(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if args.command == "depth":
        out.write(f"{integer_depth(args.x)}\n")
        return 0
    if args.command == "selftest":
        t0 = time.perf_counter()
        bad = sweep_zn(2, args.upper)
        for n, problems in sorted(bad.items()):
            out.write(f"Z_{n}: {'; '.join(problems)}\n")
        out.write(
            f"selftest n in [2, {args.upper}]: {len(bad)} mismatches "
            f"({time.perf_counter() - t0:.1f}s)\n"
        )
        return 4 if bad else 0
    limits = Limits.from_env(max_elems=args.max_elems)
    opts = dict(verify=args.verify, focus=args.focus, limits=limits, timings=args.timings)
    if args.command == "zn":
        doc, decomp = run_zn(args.n, **opts)
    else:
        doc, decomp = run_quad(args.d, args.ideal, **opts)
    _emit(args, doc, decomp, out)
    return 0


def main(argv=None):
    try:
        return run(argv)
    except RingStratError as exc:
        print(f"ringstrat: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
