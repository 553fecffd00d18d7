"""Finite commutative rings with 1 and their element-level ideal machinery.

Elements are canonical indices ``0 .. order-1``.  Every ring exposes
vectorised ``_add``/``_mul``/``_neg`` that accept numpy ``int64`` arrays (or
scalars) and broadcast; the public ``add``/``mul``/``neg`` wrap them for
plain ints.  Rings are immutable once built; a few derived tables are
computed lazily and cached on the instance.

``Zn`` uses residues ``0 .. n-1``, so the residue written ``n`` in
``{1, ..., n}`` conventions is reported here as ``0``.
"""
from dataclasses import dataclass, field, replace
from functools import cached_property

import numpy as np

from .errors import InfiniteQuotient, InvalidIdeal, InvalidParameter
from .lattice import QuadLattice, check_d, format_element

_INT64_SAFE = 2**62
_CHUNK = 1 << 22


class FiniteRing:
    kind = "abstract"

    def __init__(self, order, zero, one):
        self.order = order
        self.zero = zero
        self.one = one

    # vectorised arithmetic, overridden per kind
    def _add(self, x, y):
        raise NotImplementedError

    def _mul(self, x, y):
        raise NotImplementedError

    def _neg(self, x):
        raise NotImplementedError

    def add(self, x, y):
        return int(self._add(np.int64(x), np.int64(y)))

    def mul(self, x, y):
        return int(self._mul(np.int64(x), np.int64(y)))

    def neg(self, x):
        return int(self._neg(np.int64(x)))

    def check_element(self, x):
        if not 0 <= x < self.order:
            raise InvalidParameter(f"{x} is not an element index of a ring of order {self.order}")

    @cached_property
    def elements(self):
        out = np.arange(self.order, dtype=np.int64)
        out.setflags(write=False)
        return out

    def label(self, x):
        return str(int(x))

    def descriptor(self):
        return {"kind": self.kind, "order": self.order}

    def parse_element(self, text):
        x = int(text)
        self.check_element(x)
        return x

    @cached_property
    def integer_images(self):
        """``[0, 1, 1+1, ...]`` up to the additive order of 1."""
        out = [self.zero]
        if self.order == 1:
            return np.array(out, dtype=np.int64)
        cur = self.one
        while cur != self.zero:
            out.append(cur)
            cur = self.add(cur, self.one)
        return np.array(out, dtype=np.int64)

    @cached_property
    def _principal(self):
        """Principal ideal of every element, grouped.

        Returns ``(ideal_id, masks, generators, key_to_id)`` where
        ``ideal_id[x]`` indexes ``masks``/``generators``, and each generator is
        the smallest element producing that ideal.
        """
        ideal_id = np.empty(self.order, dtype=np.int64)
        masks, generators, key_to_id = [], [], {}
        everything = self.elements
        for x in range(self.order):
            mask = np.zeros(self.order, dtype=bool)
            mask[self._mul(np.int64(x), everything)] = True
            key = np.packbits(mask).tobytes()
            k = key_to_id.get(key)
            if k is None:
                k = key_to_id[key] = len(masks)
                mask.setflags(write=False)
                masks.append(mask)
                generators.append(x)
            ideal_id[x] = k
        ideal_id.setflags(write=False)
        return ideal_id, masks, generators, key_to_id

    @cached_property
    def unit_set(self):
        e = self.elements
        return frozenset(x for x in range(self.order) if (self._mul(np.int64(x), e) == self.one).any())

    @cached_property
    def principal_matrix(self):
        """Boolean matrix: row k is the mask of principal ideal k."""
        out = np.stack(self._principal[1])
        out.setflags(write=False)
        return out

    def principal_generator(self, mask):
        """Smallest generator of the ideal given by ``mask``, or None."""
        _, _, generators, key_to_id = self._principal
        k = key_to_id.get(np.packbits(mask).tobytes())
        return None if k is None else generators[k]


class Zn(FiniteRing):
    kind = "Zn"

    def __init__(self, n):
        if n * n >= _INT64_SAFE:
            raise InvalidParameter(f"n={n} too large for int64 products")
        super().__init__(n, 0, 1 % n)
        self.n = n

    def _add(self, x, y):
        return (x + y) % self.n

    def _mul(self, x, y):
        return (x * y) % self.n

    def _neg(self, x):
        return (-x) % self.n

    def descriptor(self):
        return {"kind": self.kind, "n": self.n}

    def parse_element(self, text):
        return int(text) % self.n

    def __repr__(self):
        return f"Zn({self.n})"


class QuadQuotient(FiniteRing):
    """Z[sqrt d]/A.  Index ``b*m + a`` is the element ``a + b*sqrt d`` with
    ``0 <= a < m`` and ``0 <= b < f`` taken from the HNF rows of A.

    Intermediate products are bounded by ``(|d| + 3) * m**2``, which must stay
    below 2**62.
    """

    kind = "QuadQuotient"

    def __init__(self, lattice):
        d, m = lattice.d, lattice.m
        if (abs(d) + 3) * m * m >= _INT64_SAFE:
            raise InvalidParameter(f"ideal of norm {lattice.norm} too large for int64 arithmetic")
        self.d = d
        self.lattice = lattice
        self.m, self.c, self.f = lattice.m, lattice.c, lattice.f
        super().__init__(lattice.norm, 0, self.element(1, 0))

    def _reduce(self, a, b):
        q = b // self.f
        b = b - q * self.f
        a = (a - q * self.c) % self.m
        return b * self.m + a

    def element(self, a, b):
        return int(self._reduce(np.int64(a), np.int64(b)))

    def coords(self, x):
        return x % self.m, x // self.m

    def _add(self, x, y):
        a1, b1 = self.coords(x)
        a2, b2 = self.coords(y)
        return self._reduce(a1 + a2, b1 + b2)

    def _neg(self, x):
        a, b = self.coords(x)
        return self._reduce(-a, -b)

    def _mul(self, x, y):
        a1, b1 = self.coords(x)
        a2, b2 = self.coords(y)
        return self._reduce(a1 * a2 + self.d * b1 * b2, a1 * b2 + a2 * b1)

    def label(self, x):
        a, b = self.coords(int(x))
        return format_element(self.d, a, b)

    def descriptor(self):
        return {"kind": self.kind, "d": self.d, "hnf": [list(r) for r in self.lattice.rows]}

    def parse_element(self, text):
        from .parsing import parse_quad_element

        a, b = parse_quad_element(text)
        return self.element(a, b)

    def __repr__(self):
        return f"QuadQuotient(d={self.d}, A={self.lattice})"


class QuotientRing(FiniteRing):
    """R/I with cosets indexed in ascending order of their smallest member.

    ``tie_break`` picks which member of each coset is used as representative
    when multiplying; the result must not depend on it.
    """

    kind = "QuotientByIdeal"

    def __init__(self, base, ideal, tie_break="min"):
        if tie_break not in ("min", "max"):
            raise InvalidParameter("tie_break must be 'min' or 'max'")
        self.base = base
        self.ideal = ideal
        members = np.array(sorted(ideal.elements), dtype=np.int64)
        everything = base.elements
        lo = everything.copy()
        hi = everything.copy()
        for i in members:
            shifted = base._add(everything, i)
            np.minimum(lo, shifted, out=lo)
            np.maximum(hi, shifted, out=hi)
        mins = np.unique(lo)
        self.proj = np.searchsorted(mins, lo)
        self.reps = mins if tie_break == "min" else np.empty_like(mins)
        if tie_break == "max":
            self.reps[self.proj] = hi
        super().__init__(len(mins), 0, int(self.proj[base.one]))

    def _add(self, x, y):
        return self.proj[self.base._add(self.reps[x], self.reps[y])]

    def _mul(self, x, y):
        return self.proj[self.base._mul(self.reps[x], self.reps[y])]

    def _neg(self, x):
        return self.proj[self.base._neg(self.reps[x])]

    def label(self, x):
        return f"[{self.base.label(int(self.reps[int(x)]))}]"

    def descriptor(self):
        return {"kind": self.kind, "order": self.order, "base": self.base.descriptor()}


class TableRing(FiniteRing):
    """A ring given by explicit addition and multiplication tables."""

    kind = "Table"

    def __init__(self, add_table, mul_table, zero=0, one=1, names=None):
        self.add_table = np.asarray(add_table, dtype=np.int64)
        self.mul_table = np.asarray(mul_table, dtype=np.int64)
        n = len(self.add_table)
        if self.add_table.shape != (n, n) or self.mul_table.shape != (n, n):
            raise InvalidParameter("tables must be square and of equal size")
        self.names = names
        super().__init__(n, zero, one)
        _check_ring_axioms(self)

    def _add(self, x, y):
        return self.add_table[x, y]

    def _mul(self, x, y):
        return self.mul_table[x, y]

    def _neg(self, x):
        return np.argmax(self.add_table == self.zero, axis=1)[x]

    def label(self, x):
        return self.names[int(x)] if self.names else str(int(x))


def _check_ring_axioms(R):
    e = R.elements
    A, M = e[:, None], e[None, :]
    if not (np.array_equal(R._add(A, M), R._add(M, A)) and np.array_equal(R._mul(A, M), R._mul(M, A))):
        raise InvalidParameter("operations are not commutative")
    if not (np.all(R._add(e, R.zero) == e) and np.all(R._mul(e, R.one) == e)):
        raise InvalidParameter("zero/one are not identities")
    if not np.all((R._add(A, M) == R.zero).any(axis=1)):
        raise InvalidParameter("missing additive inverses")
    for x in range(R.order):
        xy = R._mul(x, e)
        if not np.array_equal(R._mul(xy[:, None], M), R._mul(x, R._mul(A, M))):
            raise InvalidParameter("multiplication is not associative")
        if not np.array_equal(R._mul(x, R._add(A, M)), R._add(xy[:, None], xy[None, :])):
            raise InvalidParameter("multiplication does not distribute")
        xa = R._add(x, e)
        if not np.array_equal(R._add(xa[:, None], M), R._add(x, R._add(A, M))):
            raise InvalidParameter("addition is not associative")


# ---------------------------------------------------------------------------
# ideals


@dataclass(frozen=True)
class Ideal:
    """An ideal as a set of element indices.

    ``generator`` is the smallest element whose principal ideal is this one
    (None when the ideal is not principal); ``gens`` is some ideal-generating
    set.  Equality and hashing use the element set only.
    """

    elements: frozenset
    generator: object = field(default=None, compare=False)
    gens: tuple = field(default=(), compare=False, repr=False)
    mask: np.ndarray = field(default=None, compare=False, repr=False)

    @property
    def is_principal(self):
        return self.generator is not None

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self.elements

    def sorted(self):
        return sorted(self.elements)

    def __le__(self, other):
        return self.elements <= other.elements

    def __lt__(self, other):
        return self.elements < other.elements


def ideal_from_mask(R, mask, gens=None):
    mask = np.asarray(mask, dtype=bool).copy()
    mask.setflags(write=False)
    generator = R.principal_generator(mask)
    if generator is not None:
        gens = (generator,)
    ideal = Ideal(frozenset(np.flatnonzero(mask).tolist()), generator, tuple(gens or ()), mask)
    if not ideal.gens:
        ideal = replace(ideal, gens=ideal_generators(R, ideal))
    return ideal


def _mask_of(R, ideal):
    if ideal.mask is not None:
        return ideal.mask
    mask = np.zeros(R.order, dtype=bool)
    mask[list(ideal.elements)] = True
    return mask


def is_ideal(R, elements):
    idx = np.array(sorted(set(elements)), dtype=np.int64)
    if idx.size == 0 or idx.min() < 0 or idx.max() >= R.order:
        return False
    mask = np.zeros(R.order, dtype=bool)
    mask[idx] = True
    if not mask[R.zero]:
        return False
    for x in idx:
        if not (mask[R._add(x, idx)].all() and mask[R._mul(x, R.elements)].all()):
            return False
    return True


def make_ideal(R, elements):
    """Validate ``elements`` as an ideal of R and wrap it."""
    if not is_ideal(R, elements):
        raise InvalidIdeal("element set is not an ideal")
    mask = np.zeros(R.order, dtype=bool)
    mask[list(elements)] = True
    return ideal_from_mask(R, mask)


def principal_ideal(R, x):
    R.check_element(x)
    ideal_id, masks, generators, _ = R._principal
    k = ideal_id[x]
    mask = masks[k]
    return Ideal(frozenset(np.flatnonzero(mask).tolist()), generators[k], (generators[k],), mask)


def annihilator(R, x):
    R.check_element(x)
    return ideal_from_mask(R, R._mul(np.int64(x), R.elements) == R.zero)


def units(R):
    return R.unit_set


def unit_array(R):
    return np.array(sorted(units(R)), dtype=np.int64)


def zero_ideal(R):
    return principal_ideal(R, R.zero)


def unit_ideal(R):
    return principal_ideal(R, R.one)


def subgroup_sum(R, s_mask, h_idx):
    """Mask of S + H for additive subgroups S (mask) and H (indices)."""
    res = s_mask.copy()
    s_idx = np.flatnonzero(s_mask)
    while True:
        missing = h_idx[~res[h_idx]]
        if missing.size == 0:
            return res
        res[R._add(s_idx, missing[0])] = True


def additive_closure(R, mask):
    """Mask of the additive subgroup generated by the elements in ``mask``."""
    res = np.zeros(R.order, dtype=bool)
    res[R.zero] = True
    while True:
        missing = np.flatnonzero(mask & ~res)
        if missing.size == 0:
            return res
        cyclic = np.unique(R._mul(missing[0], R.integer_images))
        res = subgroup_sum(R, res, cyclic)


def ideal_sum(R, I, J):
    mask = subgroup_sum(R, _mask_of(R, I), np.array(sorted(J.elements), dtype=np.int64))
    return ideal_from_mask(R, mask, gens=tuple(I.gens) + tuple(J.gens))


def ideal_generators(R, I):
    """A small ideal-generating set of I (greedy, ascending)."""
    if I.gens:
        return I.gens
    target = _mask_of(R, I)
    cur = np.zeros(R.order, dtype=bool)
    cur[R.zero] = True
    gens = []
    for x in np.flatnonzero(target):
        if not cur[x]:
            gens.append(int(x))
            cur = subgroup_sum(R, cur, np.flatnonzero(principal_ideal(R, int(x)).mask))
    return tuple(gens) or (R.zero,)


def ideal_generated(R, gens):
    mask = np.zeros(R.order, dtype=bool)
    mask[R.zero] = True
    for g in gens:
        mask = subgroup_sum(R, mask, np.flatnonzero(principal_ideal(R, int(g)).mask))
    return ideal_from_mask(R, mask, gens=tuple(int(g) for g in gens))


def ideal_product(R, I, J):
    """IJ as the ideal generated by products of generators of I and J."""
    gi, gj = ideal_generators(R, I), ideal_generators(R, J)
    if len(gi) == 1 and len(gj) == 1:
        return principal_ideal(R, R.mul(gi[0], gj[0]))
    return ideal_generated(R, [R.mul(a, b) for a in gi for b in gj])


def ideal_product_naive(R, I, J):
    """IJ as the additive closure of all pairwise products of members."""
    a = np.array(sorted(I.elements), dtype=np.int64)
    b = np.array(sorted(J.elements), dtype=np.int64)
    products = np.zeros(R.order, dtype=bool)
    step = max(1, _CHUNK // max(1, len(b)))
    for lo in range(0, len(a), step):
        products[R._mul(a[lo:lo + step, None], b[None, :]).ravel()] = True
    return ideal_from_mask(R, additive_closure(R, products))


def quotient_by_ideal(R, I, tie_break="min"):
    if not is_ideal(R, I.elements):
        raise InvalidIdeal("cannot form a quotient by a non-ideal")
    return QuotientRing(R, I, tie_break)


def make_zn(n):
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise InvalidParameter(f"Z_n needs n >= 1, got {n!r}")
    return Zn(int(n))


def make_quad_quotient(d, A):
    """Z[sqrt d]/A for a nonzero ideal lattice A (``QuadLattice`` or HNF rows)."""
    check_d(d)
    if A is None:
        raise InfiniteQuotient("quotient by the zero ideal is infinite")
    if not isinstance(A, QuadLattice):
        rows = [tuple(r) for r in A]
        if all(v == 0 for r in rows for v in r):
            raise InfiniteQuotient("quotient by the zero ideal is infinite")
        A = QuadLattice.from_rows(d, *rows)
    if A.d != d:
        raise InvalidParameter("lattice belongs to a different d")
    return QuadQuotient(A)


def add(R, x, y):
    return R.add(x, y)


def mul(R, x, y):
    return R.mul(x, y)


def neg(R, x):
    return R.neg(x)
