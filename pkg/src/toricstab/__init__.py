"""Exact stability invariants of toric Fano varieties from reflexive polytopes."""

from .errors import (
    DimensionError,
    InvariantViolation,
    NotReflexiveError,
    ParseError,
    PolytopeError,
    ResourceLimitError,
    ToricStabError,
)
from .polytope import (
    DUAL,
    FAN,
    HalfspaceRep,
    Polytope,
    dual_polytope,
    is_reflexive,
    is_smooth_fano,
    vertex_enumeration,
)
from .lattice import ehrhart_polynomial, lattice_points, lattice_sum_polynomial, reciprocity_check
from .stability import (
    PiecewiseLinearFunction,
    chow_condition_asymptotic,
    chow_condition_fixed,
    delta_invariant,
    ding_invariant,
    ding_polystable,
    facet_selector,
    greatest_ricci_lower_bound,
    k_polystable,
    theorem_chain,
)
from .roots import demazure_roots, is_reductive, nill_pairing_criterion, rays, vertex_sum_sufficient
from .formats import parse_pl_function, parse_polytope, parse_polytopes, serialize_polytope
from .report import analyze, scan

__version__ = "0.1.0"
