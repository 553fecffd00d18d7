"""Recipe-versus-oracle comparison."""
import time

from .oracle import decompose_brute
from .recipe import decompose_recipe
from .ring import make_zn


def compare_decompositions(a, b):
    """Human-readable differences between two decompositions (empty if equal)."""
    problems = []
    ca, cb = a.by_idempotent(), b.by_idempotent()
    if set(ca) != set(cb):
        problems.append(f"idempotent sets differ: {len(ca)} vs {len(cb)} components")
    for e in set(ca) & set(cb):
        x, y = ca[e], cb[e]
        g = a.ring.label(x.generator)
        if x.elements != y.elements:
            problems.append(f"component ({g}): element sets differ")
        if x.base != y.base:
            problems.append(f"component ({g}): bases differ")
        if x.layers != y.layers:
            problems.append(f"component ({g}): layers differ ({x.height} vs {y.height})")
    if set(a.hasse) != set(b.hasse):
        problems.append("Hasse edges differ")
    return problems


def verify_ring(R, factorization=None, limit=None):
    t0 = time.perf_counter()
    recipe = decompose_recipe(R, factorization)
    t1 = time.perf_counter()
    oracle = decompose_brute(R, limit)
    t2 = time.perf_counter()
    return recipe, oracle, compare_decompositions(recipe, oracle), {"recipe_s": t1 - t0, "oracle_s": t2 - t1}


def sweep_zn(lo=2, hi=300):
    """``{n: problems}`` for every n in [lo, hi] where recipe and oracle disagree."""
    bad = {}
    for n in range(lo, hi + 1):
        _, _, problems, _ = verify_ring(make_zn(n))
        if problems:
            bad[n] = problems
    return bad
