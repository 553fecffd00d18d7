"""Ideals of Z[sqrt d] as rank-2 integer lattices in Hermite normal form.

A pair ``(a, b)`` stands for ``a + b*sqrt(d)``.  Every ideal lattice has a
unique basis ``(m, 0), (c, f)`` with ``m, f > 0`` and ``0 <= c < m``; two
lattices are equal exactly when these rows are equal.
"""
from dataclasses import dataclass
from math import gcd

import numpy as np

from .arith import factor_integer, is_prime, is_squarefree
from .errors import (
    FactorisationFailure,
    InvalidIdeal,
    InvalidParameter,
    UnsupportedRing,
    ZeroIdeal,
)


def check_d(d):
    if not isinstance(d, int) or d in (0, 1) or not is_squarefree(d):
        raise UnsupportedRing(f"d={d} must be a squarefree integer other than 0, 1")
    if d % 4 == 1:
        raise UnsupportedRing(f"d={d} is 1 mod 4: Z[sqrt d] is not the maximal order")


def quad_mul(d, u, v):
    a, b = u
    a2, b2 = v
    return (a * a2 + d * b * b2, a * b2 + a2 * b)


def format_element(d, a, b):
    """Render ``a + b*sqrt(d)`` as e.g. ``5+3√-5``, ``√-5`` or ``-2``."""
    root = f"√{d}"
    if b == 0:
        return str(a)
    coef = {1: "", -1: "-"}.get(b, str(b))
    tail = coef + root
    if a == 0:
        return tail
    return f"{a}{tail}" if tail.startswith("-") else f"{a}+{tail}"


def _ext_gcd(a, b):
    """Return ``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b) >= 0``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        return -a, -s0, -t0
    return a, s0, t0


def _hnf_rows(vectors):
    m = 0
    row = None
    for a, b in vectors:
        if b == 0:
            m = gcd(m, a)
            continue
        if row is None:
            row = (a, b)
            continue
        c, f = row
        g, s, t = _ext_gcd(f, b)
        m = gcd(m, (b // g) * c - (f // g) * a)
        row = (s * c + t * a, g)
    if row is None and m == 0:
        raise ZeroIdeal("all generators are zero")
    if row is None or m == 0:
        raise InvalidParameter("generators span a lattice of rank < 2")
    c, f = row
    if f < 0:
        c, f = -c, -f
    return m, c % m, f


@dataclass(frozen=True, order=True)
class QuadLattice:
    """HNF lattice ``{x*(m, 0) + y*(c, f)}`` that is an ideal of Z[sqrt d]."""

    d: int
    m: int
    c: int
    f: int

    def __post_init__(self):
        if self.m <= 0 or self.f <= 0 or not 0 <= self.c < self.m:
            raise InvalidIdeal(f"rows ({self.m},0),({self.c},{self.f}) are not in HNF")
        if not (self.contains((0, self.m)) and self.contains((self.f * self.d, self.c))):
            raise InvalidIdeal(f"lattice {self.rows} is not closed under sqrt({self.d})")

    @classmethod
    def from_rows(cls, d, row1, row2):
        (m, zero), (c, f) = row1, row2
        if zero != 0:
            raise InvalidIdeal("first HNF row must be (m, 0)")
        return cls(d, m, c, f)

    @property
    def rows(self):
        return ((self.m, 0), (self.c, self.f))

    @property
    def norm(self):
        return self.m * self.f

    def contains(self, v):
        a, b = v
        if b % self.f:
            return False
        return (a - (b // self.f) * self.c) % self.m == 0

    def contains_array(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        return (b % self.f == 0) & ((a - (b // self.f) * self.c) % self.m == 0)

    def is_unit(self):
        return self.norm == 1

    def __str__(self):
        if self.norm == 1:
            return "(1)"
        if self.c == 0 and self.f == self.m:
            return f"({self.m})"
        return f"({self.m}, {format_element(self.d, self.c, self.f)})"


def hnf_from_generators(d, gens):
    """HNF of the Z[sqrt d]-ideal generated by ``gens``."""
    check_d(d)
    gens = [tuple(int(t) for t in g) for g in gens]
    if not gens:
        raise InvalidParameter("need at least one generator")
    vectors = gens + [(d * b, a) for a, b in gens]
    m, c, f = _hnf_rows(vectors)
    return QuadLattice(d, m, c, f)


def unit_lattice(d):
    return hnf_from_generators(d, [(1, 0)])


def _same_d(X, Y):
    if X.d != Y.d:
        raise InvalidParameter(f"lattices live in different rings (d={X.d} vs d={Y.d})")


def lattice_product(X, Y):
    _same_d(X, Y)
    vectors = [quad_mul(X.d, u, v) for u in X.rows for v in Y.rows]
    return QuadLattice(X.d, *_hnf_rows(vectors))


def lattice_sum(X, Y):
    _same_d(X, Y)
    return QuadLattice(X.d, *_hnf_rows(X.rows + Y.rows))


def lattice_contains(X, y):
    return X.contains(y)


def lattice_norm(X):
    return X.norm


def lattice_subset(X, Y):
    """True when X is contained in Y."""
    _same_d(X, Y)
    return all(Y.contains(v) for v in X.rows)


def lattice_power(P, k):
    out = unit_lattice(P.d)
    for _ in range(k):
        out = lattice_product(out, P)
    return out


def star_product(X, Y, A):
    """``XY + A`` for ideals X, Y containing A."""
    if not (lattice_subset(A, X) and lattice_subset(A, Y)):
        raise InvalidParameter("star product needs A contained in both factors")
    return lattice_sum(lattice_product(X, Y), A)


def split_prime(d, p):
    """Primes of Z[sqrt d] above the rational prime p, with a splitting tag.

    Returns a list of ``(QuadLattice, tag)`` with tag one of ``"split"``,
    ``"ramified"``, ``"inert"``, sorted by HNF.
    """
    check_d(d)
    if not is_prime(p):
        raise InvalidParameter(f"{p} is not prime")
    if p == 2:
        gen = (0, 1) if d % 2 == 0 else (1, 1)
        out = [(hnf_from_generators(d, [(2, 0), gen]), "ramified")]
        mult = 2
    elif d % p == 0:
        out = [(hnf_from_generators(d, [(p, 0), (0, 1)]), "ramified")]
        mult = 2
    else:
        r = next((r for r in range(1, p) if (r * r - d) % p == 0), None)
        if r is None:
            out = [(hnf_from_generators(d, [(p, 0)]), "inert")]
            mult = 1
        else:
            out = sorted(
                (hnf_from_generators(d, [(p, 0), (r, s)]), "split") for s in (-1, 1)
            )
            mult = 1
    check = unit_lattice(d)
    for P, _ in out:
        check = lattice_product(check, lattice_power(P, mult))
    if check != hnf_from_generators(d, [(p, 0)]):
        raise FactorisationFailure(f"primes above {p} do not multiply back to ({p})")
    return out


def is_prime_ideal(P):
    """Norm is p or p**2 and Z[sqrt d]/P has no zero divisors."""
    n = P.norm
    facs = factor_integer(n) if n > 1 else []
    if len(facs) != 1 or facs[0][1] > 2:
        return False
    a = np.tile(np.arange(P.m, dtype=np.int64), P.f)
    b = np.repeat(np.arange(P.f, dtype=np.int64), P.m)
    nonzero = ~P.contains_array(a, b)
    a, b = a[nonzero], b[nonzero]
    for x, y in zip(a.tolist(), b.tolist()):
        pa, pb = x * a + P.d * y * b, x * b + a * y
        if P.contains_array(pa, pb).any():
            return False
    return True


@dataclass(frozen=True)
class PrimeFactorization:
    """``(prime lattice, exponent)`` pairs, ascending by norm then HNF."""

    d: int
    factors: tuple

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    @property
    def exponents(self):
        return tuple(e for _, e in self.factors)

    def reconstruct(self):
        out = unit_lattice(self.d)
        for P, e in self.factors:
            out = lattice_product(out, lattice_power(P, e))
        return out

    def __str__(self):
        if not self.factors:
            return "(1)"
        return "·".join(str(P) + (f"^{e}" if e > 1 else "") for P, e in self.factors)


def _prime_key(P):
    return (P.norm, P.c, P.m)


def factor_ideal(A):
    """Prime factorisation of a nonzero proper ideal, verified by reconstruction."""
    if A.norm == 1:
        raise InvalidParameter("the unit ideal has no proper factorisation")
    factors = []
    for p, _ in factor_integer(A.norm):
        for P, _tag in split_prime(A.d, p):
            e = 0
            power = P
            while lattice_subset(A, power):
                e += 1
                power = lattice_product(power, P)
            if e:
                factors.append((P, e))
    factors.sort(key=lambda pe: _prime_key(pe[0]))
    result = PrimeFactorization(A.d, tuple(factors))
    if result.reconstruct() != A:
        raise FactorisationFailure(f"factors {result} do not reconstruct {A}")
    return result
