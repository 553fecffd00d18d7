"""Brute-force decomposition straight from ring arithmetic.

Nothing here knows about prime factorisations: ideals, idempotents, the
greatest-idempotent map and the power chains of each component are all
enumerated from the multiplication of the ring itself.
"""
from dataclasses import dataclass, field

import numpy as np

from .config import DEFAULT_LIMITS
from .errors import (
    InvalidSubsemigroup,
    InvariantFailure,
    ResourceLimit,
    SemilatticeLawViolation,
)
from .ring import (
    QuotientRing,
    annihilator,
    ideal_product,
    ideal_sum,
    principal_ideal,
    units,
    zero_ideal,
)

_CHUNK = 1 << 22


@dataclass(frozen=True)
class StratifiedComponent:
    """One semigroup of the semilattice: ``elements = base | layers``."""

    idempotent: object
    generator: int
    elements: frozenset
    base: frozenset
    layers: tuple
    subset: object = None

    @property
    def height(self):
        return len(self.layers)

    def depth_of(self, x):
        """0 for base elements, else the index of the layer holding x."""
        if x in self.base:
            return 0
        for i, layer in enumerate(self.layers, 1):
            if x in layer:
                return i
        raise KeyError(x)


@dataclass
class Decomposition:
    ring: object
    components: list
    provenance: str
    hasse: list = field(default_factory=list)
    unreached: list = field(default_factory=list)

    def component_of(self, x):
        for comp in self.components:
            if x in comp.elements:
                return comp
        raise KeyError(x)

    def by_idempotent(self):
        return {c.idempotent: c for c in self.components}

    def meet(self, e, f):
        return ideal_product(self.ring, e, f)


def _check_size(R, limit):
    if R.order > limit:
        raise ResourceLimit(f"ring of order {R.order} exceeds the brute-force bound {limit}")


def all_ideals(R, limit=None):
    """Every ideal of R: principal ideals closed under pairwise sums."""
    _check_size(R, limit or DEFAULT_LIMITS.brute_order)
    _, masks, generators, _ = R._principal
    found = {}
    for g in generators:
        ideal = principal_ideal(R, g)
        found[ideal] = ideal
    frontier = list(found)
    while frontier:
        fresh = []
        current = list(found)
        for I in frontier:
            for J in current:
                if I <= J or J <= I:
                    continue
                S = ideal_sum(R, I, J)
                if S not in found:
                    found[S] = S
                    fresh.append(S)
        frontier = fresh
    return sorted(found, key=lambda I: (len(I), I.sorted()))


def all_principal(R, ideals):
    return all(I.is_principal for I in ideals)


def idempotent_ideals(R, ideals):
    return [I for I in ideals if ideal_product(R, I, I) == I]


def epsilon(R, I, idempotents):
    """Greatest idempotent ideal inside I (the sum of all those contained in I)."""
    below = [J for J in idempotents if J <= I]
    out = zero_ideal(R)
    for J in below:
        out = ideal_sum(R, out, J)
    if not (out <= I and all(J <= out for J in below)):
        raise InvariantFailure("epsilon is not the greatest idempotent below I")
    if ideal_product(R, out, out) != out:
        raise InvariantFailure("epsilon produced a non-idempotent ideal")
    return out


def j_classes(R):
    """Elements grouped by their principal ideal, in ascending order."""
    ideal_id = R._principal[0]
    groups = {}
    for x, k in enumerate(ideal_id.tolist()):
        groups.setdefault(k, []).append(x)
    return [frozenset(g) for g in groups.values()]


def v_set(R, x):
    """``{u : x*u*v == x for some v}``."""
    R.check_element(x)
    ideal_id = R._principal[0]
    xu = R._mul(np.int64(x), R.elements)
    return frozenset(np.flatnonzero(R.principal_matrix[ideal_id[xu], x]).tolist())


@dataclass(frozen=True, eq=False)
class JClassGroup:
    """The J-class of x as a group, with its isomorphism onto the units of R/Ann(x).

    ``members`` is sorted; ``table[i, j]`` is the product of ``members[i]`` and
    ``members[j]`` and ``phi[i]`` the image of ``members[i]`` in ``quotient``.
    """

    members: np.ndarray
    table: np.ndarray
    identity: int
    inverse: dict
    quotient: object
    phi: np.ndarray

    @property
    def elements(self):
        return frozenset(self.members.tolist())


@dataclass(frozen=True)
class NotAGroup:
    x: int
    ideal: object
    square_ideal: object


def j_class_group(R, x):
    Ix = principal_ideal(R, x)
    Ix2 = principal_ideal(R, R.mul(x, x))
    if Ix != Ix2:
        return NotAGroup(x, Ix, Ix2)
    ideal_id = R._principal[0]
    members = np.flatnonzero(ideal_id == ideal_id[x])
    table = R._mul(members[:, None], members[None, :])
    pos = np.searchsorted(members, table)
    if not np.array_equal(members[np.minimum(pos, len(members) - 1)], table):
        raise InvariantFailure(f"J-class of {R.label(x)} is not closed")
    ident = np.flatnonzero((table == members[None, :]).all(axis=1))
    if ident.size != 1:
        raise InvariantFailure(f"J-class of {R.label(x)} has no unique identity")
    identity = int(members[ident[0]])
    has_inv = table == identity
    if not has_inv.any(axis=1).all():
        raise InvariantFailure(f"J-class of {R.label(x)} lacks inverses")
    inverse = dict(zip(members.tolist(), members[has_inv.argmax(axis=1)].tolist()))
    Q = QuotientRing(R, annihilator(R, x))
    phi = Q.proj[members]
    if sorted(phi.tolist()) != sorted(units(Q)):
        raise InvariantFailure(f"J-class of {R.label(x)} is not in bijection with units of R/Ann(x)")
    if not np.array_equal(Q.proj[table], Q._mul(phi[:, None], phi[None, :])):
        raise InvariantFailure("phi is not multiplicative")
    return JClassGroup(members, table, identity, inverse, Q, phi)


def _product_set(R, a, b):
    out = np.zeros(R.order, dtype=bool)
    step = max(1, _CHUNK // max(1, len(b)))
    for lo in range(0, len(a), step):
        out[R._mul(a[lo:lo + step, None], b[None, :]).ravel()] = True
    return out


def stratify(R, T):
    """Base and layers of the subsemigroup T via the chain T ⊇ T^2 ⊇ T^3 ..."""
    t = np.array(sorted(set(int(v) for v in T)), dtype=np.int64)
    t_mask = np.zeros(R.order, dtype=bool)
    t_mask[t] = True
    power = _product_set(R, t, t)
    if (power & ~t_mask).any():
        raise InvalidSubsemigroup("set is not closed under multiplication")
    layers = []
    prev = t_mask
    while not np.array_equal(power, prev):
        layers.append(frozenset(np.flatnonzero(prev & ~power).tolist()))
        prev = power
        power = _product_set(R, np.flatnonzero(prev), t)
    return frozenset(np.flatnonzero(prev).tolist()), tuple(layers)


def hasse_edges(ideals):
    """Covering pairs ``(upper, lower)`` under inclusion."""
    edges = []
    for hi in ideals:
        for lo in ideals:
            if lo < hi and not any(lo < mid < hi for mid in ideals):
                edges.append((hi, lo))
    return edges


def _sort_key(comp):
    return (-len(comp.idempotent), comp.idempotent.sorted())


def check_semilattice_law(R, components, meet):
    """Verify ``x*y`` lands in the component of ``e*f`` for all x, y (exhaustive)."""
    comp_id = np.empty(R.order, dtype=np.int64)
    for k, comp in enumerate(components):
        comp_id[list(comp.elements)] = k
    index = {c.idempotent: k for k, c in enumerate(components)}
    K = len(components)
    table = np.empty((K, K), dtype=np.int64)
    for i, ci in enumerate(components):
        for j, cj in enumerate(components):
            prod = meet(ci.idempotent, cj.idempotent)
            if prod not in index:
                raise SemilatticeLawViolation("product of idempotents left the image")
            table[i, j] = index[prod]
    everything = R.elements
    for x in range(R.order):
        got = comp_id[R._mul(np.int64(x), everything)]
        if not np.array_equal(got, table[comp_id[x], comp_id]):
            y = int(np.flatnonzero(got != table[comp_id[x], comp_id])[0])
            raise SemilatticeLawViolation(f"{R.label(x)}*{R.label(y)} is in the wrong component")


def decompose_brute(R, limit=None):
    limit = limit or DEFAULT_LIMITS.brute_order
    _check_size(R, limit)
    ideals = all_ideals(R, limit)
    idem = idempotent_ideals(R, ideals)
    ideal_id, _, generators, _ = R._principal
    eps_of = {}
    for k, g in enumerate(generators):
        eps_of[k] = epsilon(R, principal_ideal(R, g), idem)
    members = {}
    for x, k in enumerate(ideal_id.tolist()):
        members.setdefault(eps_of[k], []).append(x)
    components = []
    for e, xs in members.items():
        base, layers = stratify(R, xs)
        gen = e.generator if e.generator is not None else min(e.elements)
        components.append(StratifiedComponent(e, gen, frozenset(xs), base, layers))
    components.sort(key=_sort_key)
    check_semilattice_law(R, components, lambda e, f: ideal_product(R, e, f))
    image = [c.idempotent for c in components]
    unreached = [e for e in idem if e not in members]
    return Decomposition(R, components, "oracle", hasse_edges(image), unreached)


def reg_elements(R):
    """Elements x with x*y*x == x for some y."""
    ideal_id = R._principal[0]
    sq = R._mul(R.elements, R.elements)
    return frozenset(np.flatnonzero(R.principal_matrix[ideal_id[sq], R.elements]).tolist())


__all__ = [
    "Decomposition",
    "JClassGroup",
    "NotAGroup",
    "StratifiedComponent",
    "all_ideals",
    "check_semilattice_law",
    "decompose_brute",
    "epsilon",
    "hasse_edges",
    "idempotent_ideals",
    "j_class_group",
    "j_classes",
    "reg_elements",
    "stratify",
    "v_set",
]
