from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ringstrat.errors import InvalidSubsemigroup, ResourceLimit, SemilatticeLawViolation
from ringstrat.oracle import (
    NotAGroup,
    StratifiedComponent,
    all_ideals,
    check_semilattice_law,
    decompose_brute,
    epsilon,
    idempotent_ideals,
    j_class_group,
    j_classes,
    stratify,
    v_set,
)
from ringstrat.ring import ideal_product, make_zn, principal_ideal, units

from props import check_ring_properties, random_rings
from test_ring import _f2_square_zero


def ideals_by_subsets(R):
    """Every ideal, by testing each subset containing 0 for closure."""
    others = [x for x in range(R.order) if x != R.zero]
    found = []
    for r in range(len(others) + 1):
        for extra in combinations(others, r):
            s = {R.zero, *extra}
            if all(R.add(a, b) in s for a in s for b in s) and all(
                R.mul(a, t) in s for a in s for t in range(R.order)
            ):
                found.append(frozenset(s))
    return set(found)


@pytest.mark.parametrize("make", [lambda: make_zn(12), lambda: make_zn(5), lambda: make_zn(8), _f2_square_zero])
def test_all_ideals_against_subset_enumeration(make):
    R = make()
    assert {I.elements for I in all_ideals(R)} == ideals_by_subsets(R)


def test_all_ideals_examples(z12, quad50):
    assert sorted(I.generator for I in all_ideals(z12)) == [0, 1, 2, 3, 4, 6]
    assert len(all_ideals(make_zn(5))) == 2
    # divisors of (2,1+w)(5,w)^2: (1+1)*(2+1)
    assert len(all_ideals(quad50)) == 6


def test_resource_limit():
    with pytest.raises(ResourceLimit):
        all_ideals(make_zn(50), limit=49)
    with pytest.raises(ResourceLimit):
        decompose_brute(make_zn(50), limit=49)


def test_idempotents(z12, quad50):
    assert sorted(I.generator for I in idempotent_ideals(z12, all_ideals(z12))) == [0, 1, 3, 4]
    assert len(idempotent_ideals(make_zn(7), all_ideals(make_zn(7)))) == 2
    idem = set(idempotent_ideals(quad50, all_ideals(quad50)))
    assert idem == {principal_ideal(quad50, quad50.element(k, 0)) for k in (0, 1, 5, 6)}


def test_epsilon(z12):
    idem = idempotent_ideals(z12, all_ideals(z12))
    assert epsilon(z12, principal_ideal(z12, 2), idem) == principal_ideal(z12, 4)
    assert epsilon(z12, principal_ideal(z12, 6), idem) == principal_ideal(z12, 0)
    for e in idem:
        assert epsilon(z12, e, idem) == e


def test_j_classes(z12, quad50):
    assert set(j_classes(z12)) == {
        frozenset(s) for s in ({0}, {6}, {4, 8}, {2, 10}, {3, 9}, {1, 5, 7, 11})
    }
    for R in (z12, quad50):
        assert next(c for c in j_classes(R) if R.one in c) == units(R)
    root = quad50.element(0, 1)
    cls = next(c for c in j_classes(quad50) if root in c)
    assert cls == {quad50.element(0, k) for k in (1, 3, 7, 9)}


def test_v_set(z12):
    assert v_set(z12, 0) == set(range(12))
    assert v_set(z12, 5) == units(z12)
    brute = {u for u in range(12) if any(4 * u * v % 12 == 4 for v in range(12))}
    assert v_set(z12, 4) == brute
    assert {1, 4, 5, 7, 8, 11} <= v_set(z12, 4)
    assert {4 * u % 12 for u in v_set(z12, 4)} == {4 * u % 12 for u in units(z12)} == {4, 8}


def test_j_class_group(z12):
    g = j_class_group(z12, 4)
    assert g.elements == {4, 8} and g.identity == 4
    assert g.quotient.order == 3
    assert sorted(g.phi.tolist()) == [1, 2]
    one = j_class_group(z12, 1)
    assert one.elements == units(z12) and one.identity == 1
    not_group = j_class_group(z12, 2)
    assert isinstance(not_group, NotAGroup)
    assert not_group.ideal == principal_ideal(z12, 2)
    assert not_group.square_ideal == principal_ideal(z12, 4)


def test_stratify_examples(z12):
    assert stratify(z12, {2, 4, 8, 10}) == (frozenset({4, 8}), (frozenset({2, 10}),))
    assert stratify(z12, {1, 5, 7, 11}) == (frozenset({1, 5, 7, 11}), ())
    R = make_zn(81)
    base, layers = stratify(R, range(0, 81, 3))
    assert base == {0}
    unit = [u for u in range(81) if u % 3]
    assert layers == tuple(frozenset(3**i * u % 81 for u in unit) for i in (1, 2, 3))


def test_stratify_rejects_non_semigroup(z12):
    with pytest.raises(InvalidSubsemigroup):
        stratify(z12, {2, 3})


def test_decompose_brute_z12(z12):
    D = decompose_brute(z12)
    got = {c.elements: (c.base, c.layers) for c in D.components}
    assert got == {
        frozenset({1, 5, 7, 11}): (frozenset({1, 5, 7, 11}), ()),
        frozenset({3, 9}): (frozenset({3, 9}), ()),
        frozenset({2, 4, 8, 10}): (frozenset({4, 8}), (frozenset({2, 10}),)),
        frozenset({0, 6}): (frozenset({0}), (frozenset({6}),)),
    }
    assert len(D.hasse) == 4
    assert D.provenance == "oracle"


def test_decompose_brute_field_and_trivial():
    D = decompose_brute(make_zn(7))
    assert {c.elements for c in D.components} == {frozenset({0}), frozenset(range(1, 7))}
    trivial = decompose_brute(make_zn(1))
    assert [(c.elements, c.base, c.layers) for c in trivial.components] == [(frozenset({0}), frozenset({0}), ())]


def test_decompose_brute_quad(quad50):
    D = decompose_brute(quad50)
    assert len(D.components) == 4
    five = D.component_of(quad50.element(5, 0))
    assert five.base == {quad50.element(5, 0)}
    zero = D.component_of(0)
    assert zero.layers == (frozenset(quad50.element(a, b) for a, b in [(0, 2), (0, 4), (5, 1), (5, 3)]),)


def test_non_dedekind_table_ring():
    R = _f2_square_zero()
    D = decompose_brute(R)
    assert not D.unreached
    zero = D.component_of(0)
    assert zero.base == {0} and zero.layers == (frozenset({2, 4, 6}),)


def test_semilattice_law_violation_detected(z12):
    D = decompose_brute(z12)
    comps = list(D.components)
    a, b = comps[1], comps[2]
    moved = next(iter(a.elements - a.base - {z12.one}), None) or next(iter(a.elements))
    comps[1] = StratifiedComponent(a.idempotent, a.generator, a.elements - {moved}, a.base, a.layers)
    comps[2] = StratifiedComponent(b.idempotent, b.generator, b.elements | {moved}, b.base, b.layers)
    with pytest.raises(SemilatticeLawViolation):
        check_semilattice_law(z12, comps, lambda e, f: ideal_product(z12, e, f))


@pytest.mark.parametrize("R", random_rings(), ids=repr)
def test_structural_properties(R):
    check_ring_properties(R)


@settings(max_examples=50, deadline=None)
@given(st.integers(2, 120))
def test_components_partition_and_bases_are_groups(n):
    R = make_zn(n)
    D = decompose_brute(R)
    seen = np.zeros(n, dtype=int)
    for c in D.components:
        seen[list(c.elements)] += 1
        assert c.base and all(R.mul(a, b) in c.base for a in c.base for b in c.base)
        assert all(not (l1 & l2) for i, l1 in enumerate(c.layers) for l2 in c.layers[i + 1:])
    assert (seen == 1).all()
