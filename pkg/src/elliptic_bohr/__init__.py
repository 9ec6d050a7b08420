"""Exact Bohr-type radius for the segment/ellipse condenser.

Numerics for the coefficient-majorant ("Bohr sum") problem in the basis
attached to the exterior of a segment: given a function bounded by 1 on the
confocal ellipse at level rho = 1/R, when does the sum of coefficient
magnitudes times basis sup-norms stay below 1 on the segment?  The package
solves the two critical levels exactly (all-real coefficients and general),
verifies every supporting coefficient inequality on randomized certified
series, and exhibits the extremal families showing the levels are sharp.
"""

from .condenser import (
    EllipticCondenser,
    boundary_point,
    eccentricity,
    exterior_map,
    faber_eval,
    faber_sup_norm,
    zhukovskii,
)
from .coefficients import (
    CHECK_FAMILIES,
    DEFAULT_FAMILIES,
    FaberSeries,
    HypothesisError,
    InequalityEntry,
    InequalityReport,
    PairObjectiveMax,
    QuadratureGrid,
    RegimeError,
    boundary_values,
    check_caratheodory,
    check_envelope_derivatives,
    check_even_modulus,
    check_majorant,
    check_modulus_coupling,
    check_real_part_recursion,
    check_real_sharpening,
    check_weighted_pair,
    envelope,
    envelope_chain,
    envelope_chain_tail,
    eval_series,
    extract_coefficients,
    generate_positive_real_part,
    maximize_pair_objective,
    pair_objective,
    weighted_pair_naive_rhs,
)
from .radius import (
    BohrDecision,
    DivergenceError,
    RadiusSolution,
    R_from_rho,
    bohr_decision,
    bohr_sum,
    certify_unit_bound,
    rho_from_R,
    series_general,
    series_real,
    solve_radius,
)
from .extremal import (
    ExtremalTrace,
    OptimalityWitness,
    TraceStep,
    argmax_on_circle,
    check_normalizer_asymptotics,
    extremal_trace,
    gamma_factor,
    optimality_witness,
    phi1_eval,
    phi2_eval,
    theta_factor,
    weighted_coefficient_sum,
)

__version__ = "0.1.0"

__all__ = [
    "EllipticCondenser",
    "boundary_point",
    "eccentricity",
    "exterior_map",
    "faber_eval",
    "faber_sup_norm",
    "zhukovskii",
    "CHECK_FAMILIES",
    "DEFAULT_FAMILIES",
    "FaberSeries",
    "HypothesisError",
    "InequalityEntry",
    "InequalityReport",
    "PairObjectiveMax",
    "QuadratureGrid",
    "RegimeError",
    "boundary_values",
    "check_caratheodory",
    "check_envelope_derivatives",
    "check_even_modulus",
    "check_majorant",
    "check_modulus_coupling",
    "check_real_part_recursion",
    "check_real_sharpening",
    "check_weighted_pair",
    "envelope",
    "envelope_chain",
    "envelope_chain_tail",
    "eval_series",
    "extract_coefficients",
    "generate_positive_real_part",
    "maximize_pair_objective",
    "pair_objective",
    "weighted_pair_naive_rhs",
    "BohrDecision",
    "DivergenceError",
    "RadiusSolution",
    "R_from_rho",
    "bohr_decision",
    "bohr_sum",
    "certify_unit_bound",
    "rho_from_R",
    "series_general",
    "series_real",
    "solve_radius",
    "ExtremalTrace",
    "OptimalityWitness",
    "TraceStep",
    "argmax_on_circle",
    "check_normalizer_asymptotics",
    "extremal_trace",
    "gamma_factor",
    "optimality_witness",
    "phi1_eval",
    "phi2_eval",
    "theta_factor",
    "weighted_coefficient_sum",
]
