"""Multiplicative semigroups of finite quotients of Dedekind domains.

The multiplicative semigroup of ``Z_n`` or ``Z[sqrt d]/A`` is a Boolean
semilattice of stratified extensions of groups.  ``decompose_recipe`` builds
that structure from a prime factorisation; ``decompose_brute`` recomputes it
from ring arithmetic alone so the two can be compared.
"""
from .errors import *  # noqa: F401,F403
from .lattice import (
    PrimeFactorization,
    QuadLattice,
    factor_ideal,
    hnf_from_generators,
    lattice_contains,
    lattice_norm,
    lattice_product,
    lattice_subset,
    lattice_sum,
    split_prime,
    star_product,
)
from .oracle import (
    Decomposition,
    StratifiedComponent,
    all_ideals,
    decompose_brute,
    epsilon,
    idempotent_ideals,
    j_class_group,
    j_classes,
    stratify,
    v_set,
)
from .recipe import (
    classify_element,
    component_structure,
    decompose_recipe,
    factor_integer,
    integer_depth,
)
from .report import ReportDocument, render_dot, render_text, run_quad, run_zn
from .ring import (
    FiniteRing,
    Ideal,
    annihilator,
    make_quad_quotient,
    make_zn,
    mul,
    principal_ideal,
    quotient_by_ideal,
    units,
)
from .verify import compare_decompositions, sweep_zn

__version__ = "0.1.0"
