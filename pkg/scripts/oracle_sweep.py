"""Compare recipe and brute-force decompositions over a range of rings.

    python3 scripts/oracle_sweep.py --lo 2 --hi 300 --quad -5 -1 2 3
"""

import argparse
import time

from ringstrat.lattice import lattice_norm
from ringstrat.ring import make_quad_quotient
from ringstrat.verify import sweep_zn, verify_ring


def quad_ideals(d, bound):
    """Ideals f*J of Z[sqrt d] with J primitive and norm(f*J) <= bound."""
    seen = set()
    for m in range(1, bound + 1):
        for c in range(m):
            if (c * c - d) % m:
                continue
            f = 1
            while f * f * m <= bound:
                seen.add((f * m, f * c, f))
                f += 1
    return sorted(seen)


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--lo", type=int, default=2)
    ap.add_argument("--hi", type=int, default=300)
    ap.add_argument("--quad", type=int, nargs="*", default=[-5, -1, 2, 3])
    ap.add_argument("--quad-bound", type=int, default=200)
    args = ap.parse_args(argv)

    t0 = time.perf_counter()
    bad = sweep_zn(args.lo, args.hi)
    print(f"Z_n for n in [{args.lo}, {args.hi}]: {len(bad)} mismatches "
          f"({time.perf_counter() - t0:.1f}s)")
    for n, problems in sorted(bad.items()):
        print(f"  n={n}: {problems[0]}")

    for d in args.quad:
        t0 = time.perf_counter()
        count, failures = 0, []
        for m, c, f in quad_ideals(d, args.quad_bound):
            R = make_quad_quotient(d, [(m, 0), (c, f)])
            if R.order < 2:
                continue
            _, _, problems, _ = verify_ring(R)
            count += 1
            if problems:
                failures.append((R.lattice, problems[0]))
        print(f"Z[sqrt {d}] quotients of norm <= {args.quad_bound}: {count} rings, "
              f"{len(failures)} mismatches ({time.perf_counter() - t0:.1f}s)")
        for A, problem in failures:
            print(f"  {A} (norm {lattice_norm(A)}): {problem}")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
