"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line."""

import math
import time
from contextlib import contextmanager

import numpy as np
import pytest

import conftest
from props import check_ring_properties, random_rings
from ringstrat.lattice import factor_ideal, hnf_from_generators
from ringstrat.oracle import decompose_brute
from ringstrat.recipe import decompose_recipe, integer_depth
from ringstrat.ring import make_quad_quotient, make_zn, principal_ideal, units
from ringstrat.verify import compare_decompositions, sweep_zn


@contextmanager
def criterion(num, title, budget=None):
    start = time.perf_counter()
    status, detail = "PASS", ""
    try:
        yield
        elapsed = time.perf_counter() - start
        if budget is not None and elapsed >= budget:
            status, detail = "FAIL", f" over budget ({budget:g}s)"
            raise AssertionError(f"criterion {num} took {elapsed:.2f}s, budget {budget:g}s")
    except BaseException as exc:
        status = "FAIL"
        detail = detail or f" {type(exc).__name__}: {exc}"
        raise
    finally:
        elapsed = time.perf_counter() - start
        line = f"[criterion {num}] {status} {title} ({elapsed:.2f}s){detail}"
        conftest.ACCEPTANCE_LINES.append(line)
        print(line)


def _orbit(R, y):
    return frozenset(int(v) for v in R._mul(y, np.array(sorted(units(R)), dtype=np.int64)))


def test_criterion_1_z12():
    with criterion(1, "Z_12 components", budget=1.0):
        R = make_zn(12)
        D = decompose_recipe(R)
        got = {c.elements: (c.base, c.layers) for c in D.components}
        expect = {
            frozenset({1, 5, 7, 11}): ({1, 5, 7, 11}, ()),
            frozenset({3, 9}): ({3, 9}, ()),
            frozenset({2, 4, 8, 10}): ({4, 8}, ({2, 10},)),
            frozenset({0, 6}): ({0}, ({6},)),
        }
        assert got == expect
        assert not compare_decompositions(D, decompose_brute(R))


def test_criterion_2_z6000():
    with criterion(2, "Z_6000 component of 2000 and full oracle check", budget=60.0):
        R = make_zn(6000)
        D = decompose_recipe(R)
        comp = D.component_of(2000)
        assert comp.idempotent == principal_ideal(R, 2000)
        assert comp.height == 3

        def union(gens):
            return frozenset().union(*(_orbit(R, g) for g in gens))

        assert comp.layers[0] == union([10, 20, 40, 80, 50, 250])
        assert comp.layers[1] == union([100, 200, 400, 500])
        assert comp.layers[2] == union([1000])
        assert comp.base == union([2000])
        assert not compare_decompositions(D, decompose_brute(R))


def test_criterion_3_quadratic_quotient():
    with criterion(3, "Z[sqrt -5]/(10, 5+5sqrt -5)", budget=5.0):
        A = hnf_from_generators(-5, [(10, 0), (5, 5)])
        R = make_quad_quotient(-5, A)
        el = R.element
        assert R.order == 50
        assert len(units(R)) == 20
        fac = factor_ideal(A)
        assert [(str(P), e) for P, e in fac] == [("(2, 1+√-5)", 1), ("(5, √-5)", 2)]
        D = decompose_recipe(R, fac)
        assert len(D.components) == 4
        gens = {c.idempotent for c in D.components}
        assert gens == {principal_ideal(R, el(k, 0)) for k in (1, 6, 5, 0)}
        by = D.by_idempotent()
        r5 = by[principal_ideal(R, el(5, 0))]
        r0 = by[principal_ideal(R, el(0, 0))]
        r6 = by[principal_ideal(R, el(6, 0))]
        assert r5.base == {el(5, 0)}
        assert r5.layers[0] == {el(0, 1), el(0, 3), el(0, 7), el(0, 9)}
        assert r0.layers[0] == {el(0, 2), el(0, 4), el(5, 1), el(5, 3)}
        assert len(r6.base) == 20
        assert not compare_decompositions(D, decompose_brute(R))


@pytest.mark.parametrize("p, k", [(2, 3), (3, 4), (5, 4)])
def test_criterion_4_prime_powers(p, k):
    with criterion(4, f"Z_{p**k} is a 2-chain with {k - 1} layers", budget=1.0):
        R = make_zn(p**k)
        D = decompose_recipe(R)
        assert len(D.components) == 2 and len(D.hasse) == 1
        unit_comp, other = D.components
        assert unit_comp.elements == units(R)
        assert other.base == {0} and other.height == k - 1
        for i, layer in enumerate(other.layers, 1):
            assert layer == _orbit(R, p**i)
        assert not compare_decompositions(D, decompose_brute(R))


def test_criterion_5_sweep():
    with criterion(5, "recipe == oracle for every n in [2, 300]", budget=120.0):
        bad = sweep_zn(2, 300)
        assert bad == {}, f"{len(bad)} mismatches: {sorted(bad)[:10]}"


def test_criterion_6_property_suite(z12, quad50, z6000):
    rings = random_rings()
    assert len(rings) >= 50
    fixtures = [z12, quad50, z6000] + [make_zn(q) for q in (8, 81, 625)]
    with criterion(6, f"structural properties on {len(rings)} random rings + {len(fixtures)} fixtures"):
        for R in rings + fixtures:
            check_ring_properties(R)


def _omega_table(limit):
    """Omega(n) by a smallest-prime-factor sieve."""
    spf = np.arange(limit + 1, dtype=np.int64)
    for p in range(2, math.isqrt(limit) + 1):
        if spf[p] == p:
            block = spf[p * p :: p]
            np.putmask(block, block == np.arange(p * p, limit + 1, p), p)
            spf[p * p :: p] = block
    omega = np.zeros(limit + 1, dtype=np.int64)
    for n in range(2, limit + 1):
        omega[n] = omega[n // spf[n]] + 1
    return omega


def test_criterion_7_integer_depth():
    with criterion(7, "integer_depth == Omega for 2 <= |x| <= 1e5"):
        limit = 10**5
        omega = _omega_table(limit)
        assert integer_depth(7) == 1 and integer_depth(12) == 3
        wrong = [x for x in range(2, limit + 1)
                 if integer_depth(x) != omega[x] or integer_depth(-x) != omega[x]]
        assert wrong == []
