"""Print the decompositions of the standard small examples.

    python3 scripts/worked_examples.py
"""

import sys

from ringstrat.config import Limits
from ringstrat.lattice import factor_ideal, hnf_from_generators
from ringstrat.report import render_text, run_quad, run_zn

SHORT = Limits(max_elems=12)


def main():
    for n in (12, 8, 81):
        doc, _ = run_zn(n, verify=True, limits=SHORT)
        print(render_text(doc))
        print()

    A = hnf_from_generators(-5, [(10, 0), (5, 5)])
    print("ideal", A, "=", factor_ideal(A))
    doc, _ = run_quad(-5, "10, 5+5*w", verify=True, limits=SHORT)
    print(render_text(doc))
    print()

    # one component of a larger ring, focused on 2000
    doc, _ = run_zn(6000, focus=2000, verify=True, limits=Limits(max_elems=8))
    print(render_text(doc))
    return 0


if __name__ == "__main__":
    sys.exit(main())
