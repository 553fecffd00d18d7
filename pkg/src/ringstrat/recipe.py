"""Decomposition from a prime factorisation, without enumerating ideals.

For ``R = S/A`` with ``A = P_1^e_1 ... P_n^e_n`` the idempotent ideals are
indexed by subsets K of ``{1..n}``.  Each element is classified by its capped
valuation profile ``f_i = min(v_{P_i}(xS + A), e_i)``; bases and layers are
unions of unit orbits ``y*U`` over exponent profiles.
"""
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from math import gcd, prod

import numpy as np

from .arith import factor_integer, is_prime, valuation
from .config import DEFAULT_LIMITS
from .errors import (
    FactorisationFailure,
    InvalidParameter,
    NotPrincipal,
    ResourceLimit,
    UnsupportedRing,
)
from .lattice import (
    PrimeFactorization,
    hnf_from_generators,
    is_prime_ideal,
    lattice_power,
    lattice_subset,
)
from .oracle import Decomposition, StratifiedComponent
from .ring import QuadQuotient, Zn, principal_ideal, unit_array

__all__ = [
    "Classification",
    "ValuationProfile",
    "classify_element",
    "component_structure",
    "decompose_recipe",
    "default_factorization",
    "factor_integer",
    "integer_depth",
    "subsets",
]


@dataclass(frozen=True)
class ValuationProfile:
    exponents: tuple
    caps: tuple

    def __post_init__(self):
        if any(not 0 <= f <= e for f, e in zip(self.exponents, self.caps)):
            raise InvalidParameter(f"profile {self.exponents} exceeds caps {self.caps}")

    @property
    def support(self):
        return frozenset(i for i, f in enumerate(self.exponents, 1) if f > 0)

    def depth(self):
        """0 when every supported exponent is at its cap, else the least uncapped one."""
        short = [f for f, e in zip(self.exponents, self.caps) if 0 < f < e]
        return min(short) if short else 0


@dataclass(frozen=True)
class Classification:
    profile: ValuationProfile
    subset: frozenset
    depth: int

    @property
    def is_base(self):
        return self.depth == 0


@dataclass(frozen=True)
class _Prime:
    label: str
    exponent: int
    mask: np.ndarray
    generator: int
    powers: tuple = ()


def integer_depth(x):
    """Number of prime factors of |x| counted with multiplicity."""
    if not isinstance(x, (int, np.integer)) or abs(x) < 2:
        raise InvalidParameter(f"depth is defined for nonzero non-units, got {x!r}")
    return sum(e for _, e in factor_integer(abs(int(x))))


def default_factorization(R):
    """Factorisation of the defining modulus/ideal of R (empty for the zero ring)."""
    if R.order == 1:
        return ()
    if isinstance(R, Zn):
        return tuple(factor_integer(R.n))
    if isinstance(R, QuadQuotient):
        from .lattice import factor_ideal

        return factor_ideal(R.lattice)
    raise UnsupportedRing(f"no recipe for rings of kind {R.kind}")


def _fac_key(factorization):
    if isinstance(factorization, PrimeFactorization):
        return ("quad", factorization.d, factorization.factors)
    return ("int", tuple((int(p), int(e)) for p, e in factorization))


def _find_generator(R, mask, label):
    ideal_id, masks, generators, _ = R._principal
    for x in np.flatnonzero(mask).tolist():
        if np.array_equal(masks[ideal_id[x]], mask):
            return x
    raise NotPrincipal(f"prime ideal {label} is not principal in R")


@lru_cache(maxsize=64)
def _context(R, key):
    kind = key[0]
    primes = []
    if R.order == 1 and not key[-1]:
        return ()
    if kind == "int":
        if not isinstance(R, Zn):
            raise UnsupportedRing("integer factorisation given for a non-Z_n ring")
        facs = key[1]
        if any(not is_prime(p) or e < 1 for p, e in facs) or len({p for p, _ in facs}) != len(facs):
            raise InvalidParameter(f"{facs} is not a factorisation into distinct primes")
        if prod(p**e for p, e in facs) != R.n:
            raise FactorisationFailure(f"{facs} does not multiply to {R.n}")
        for p, e in facs:
            mask = R.elements % p == 0
            primes.append(_Prime(str(p), e, mask, _find_generator(R, mask, p)))
    else:
        if not isinstance(R, QuadQuotient):
            raise UnsupportedRing("ideal factorisation given for a non-quadratic ring")
        d, facs = key[1], key[2]
        fac = PrimeFactorization(d, facs)
        if d != R.d or fac.reconstruct() != R.lattice:
            raise FactorisationFailure(f"{fac} does not reconstruct {R.lattice}")
        if len({P for P, _ in facs}) != len(facs) or any(e < 1 for _, e in facs):
            raise InvalidParameter("factorisation must list distinct primes with positive exponents")
        a, b = R.coords(R.elements)
        for P, e in facs:
            if not is_prime_ideal(P):
                raise InvalidParameter(f"{P} is not a prime ideal")
            mask = P.contains_array(a, b)
            powers = tuple(lattice_power(P, k) for k in range(1, e + 1))
            primes.append(_Prime(str(P), e, mask, _find_generator(R, mask, P), powers))
    return tuple(primes)


def _profile_int(R, primes, x):
    g = gcd(int(x), R.n)
    return tuple(min(valuation(int(p.label), g), p.exponent) for p in primes)


def _profile_quad(R, primes, x):
    a, b = R.coords(int(x))
    rows = R.lattice.rows
    L = hnf_from_generators(R.d, [(a, b), *rows])
    out = []
    for p in primes:
        k = 0
        while k < p.exponent and lattice_subset(L, p.powers[k]):
            k += 1
        out.append(k)
    return tuple(out)


def classify_element(R, factorization, x):
    R.check_element(x)
    primes = _context(R, _fac_key(factorization))
    if isinstance(R, Zn):
        exps = _profile_int(R, primes, x)
    else:
        exps = _profile_quad(R, primes, x)
    profile = ValuationProfile(exps, tuple(p.exponent for p in primes))
    return Classification(profile, profile.support, profile.depth())


def _power(R, x, k):
    out = R.one
    for _ in range(k):
        out = R.mul(out, x)
    return out


def _orbit(R, y, unit_idx):
    return np.unique(R._mul(np.int64(y), unit_idx))


def component_structure(R, factorization, K, profile_cap=None):
    primes = _context(R, _fac_key(factorization))
    K = frozenset(K)
    if not K <= set(range(1, len(primes) + 1)):
        raise InvalidParameter(f"subset {sorted(K)} is not within 1..{len(primes)}")
    chosen = [(i, primes[i - 1]) for i in sorted(K)]
    cap = profile_cap or DEFAULT_LIMITS.profile_cap
    if prod(p.exponent for _, p in chosen) > cap:
        raise ResourceLimit(f"more than {cap} exponent profiles")
    U = unit_array(R)
    gen = R.one
    for _, p in chosen:
        gen = R.mul(gen, _power(R, p.generator, p.exponent))
    base = frozenset(_orbit(R, gen, U).tolist())
    caps = [p.exponent for _, p in chosen]
    height = 0 if all(e == 1 for e in caps) else max(caps) - 1
    layers = [set() for _ in range(height)]
    for exps in product(*(range(1, e + 1) for e in caps)):
        short = [f for f, e in zip(exps, caps) if f != e]
        if not short:
            continue
        y = R.one
        for f, (_, p) in zip(exps, chosen):
            y = R.mul(y, _power(R, p.generator, f))
        layers[min(short) - 1].update(_orbit(R, y, U).tolist())
    layers = tuple(frozenset(layer) for layer in layers)
    elements = base.union(*layers)
    return StratifiedComponent(principal_ideal(R, gen), gen, elements, base, layers, K)


def subsets(n):
    """All subsets of ``{1..n}``, by size then lexicographically."""
    idx = range(1, n + 1)
    return [frozenset(c) for r in range(n + 1) for c in combinations(idx, r)]


def decompose_recipe(R, factorization=None, profile_cap=None):
    if factorization is None:
        factorization = default_factorization(R)
    primes = _context(R, _fac_key(factorization))
    cap = profile_cap or DEFAULT_LIMITS.profile_cap
    if prod(p.exponent + 1 for p in primes) > cap:
        raise ResourceLimit(f"more than {cap} exponent profiles")
    nodes = subsets(len(primes))
    components = [component_structure(R, factorization, K, cap) for K in nodes]
    seen = np.zeros(R.order, dtype=np.int64)
    for comp in components:
        seen[list(comp.elements)] += 1
    if not (seen == 1).all():
        raise FactorisationFailure("recipe components do not partition the ring")
    by_subset = {c.subset: c for c in components}
    hasse = [
        (by_subset[K].idempotent, by_subset[K | {i}].idempotent)
        for K in nodes
        for i in range(1, len(primes) + 1)
        if i not in K
    ]
    return Decomposition(R, components, "recipe", hasse, [])
