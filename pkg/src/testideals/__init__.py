"""Exact singularity invariants of determinantal, Pfaffian and monomial
ideals: test ideals, multiplier ideals, F-pure / log-canonical thresholds
and jumping numbers, computed from Young-diagram data by exact rational
polyhedral optimization and cross-checked by a Frobenius brute-force oracle.
"""

from .charzero import InvariantIdealSpec, lct, multiplier_ideal, translate
from .contexts import RingContext, heights, symbolic_membership, witness_shape
from .diagrams import Diagram, derived_skew, derived_symmetric
from .engine import (
    IdealPresentation,
    ProductIdealSpec,
    e_vector,
    floating_check,
    fpt,
    fpt_bounds_check,
    gamma_polytope,
    ideal_contains,
    ideal_equal,
    integral_closure,
    jumping_numbers,
    jumping_numbers_sum,
    membership,
    minimal_generating_shapes,
    test_ideal,
    test_ideal_closed_form,
)
from .errors import ConsistencyError, DomainError, GuardExhausted
from .frobenius import PrimePower, bracket_root, monomial_power, tau_oracle
from .geometry import (
    BoxQuery,
    RationalPolytope,
    ceil_vectors,
    feasible,
    floor_vectors,
    format_rational,
    hull,
    min_max_ratio,
    parse_rational,
)
from .monomial import (
    MonomialIdeal,
    NewtonPolyhedron,
    floor_membership,
    fpt_monomial,
    newton,
    product,
    test_ideal_monomial,
)

__version__ = "0.1.0"

__all__ = [
    "BoxQuery",
    "ConsistencyError",
    "Diagram",
    "DomainError",
    "GuardExhausted",
    "IdealPresentation",
    "InvariantIdealSpec",
    "MonomialIdeal",
    "NewtonPolyhedron",
    "PrimePower",
    "ProductIdealSpec",
    "RationalPolytope",
    "RingContext",
    "bracket_root",
    "ceil_vectors",
    "derived_skew",
    "derived_symmetric",
    "e_vector",
    "feasible",
    "floating_check",
    "floor_membership",
    "floor_vectors",
    "format_rational",
    "fpt",
    "fpt_bounds_check",
    "fpt_monomial",
    "gamma_polytope",
    "heights",
    "hull",
    "ideal_contains",
    "ideal_equal",
    "integral_closure",
    "jumping_numbers",
    "jumping_numbers_sum",
    "lct",
    "membership",
    "min_max_ratio",
    "minimal_generating_shapes",
    "monomial_power",
    "multiplier_ideal",
    "newton",
    "parse_rational",
    "product",
    "symbolic_membership",
    "tau_oracle",
    "test_ideal",
    "test_ideal_closed_form",
    "test_ideal_monomial",
    "translate",
    "witness_shape",
]
