"""Continuity bounds for conditional entropies, majorization walks, spin
alignment checks, and erasure-simulation polynomials."""

from ._equivox import (
    apply_t_transform,
    apply_unjust_transfer,
    averaging_map,
    binary_entropy,
    bound_conditional,
    conditional_entropy,
    conditional_vn_entropy,
    ekr_recovery_bound,
    erasure_capacity,
    fan_norm,
    feasible_projector_pair,
    improvement_threshold,
    isotropic_pair,
    majorant_vector,
    majorizes,
    optimal_projector_pair,
    q4,
    r4_bound,
    saturating_pair,
    schatten_norm,
    shannon_entropy,
    t_transform_from_unjust,
    trace_distance,
    tv_distance,
    two_projector_spectrum,
    verify_bound,
    von_neumann_entropy,
    walk,
    wilde_bound,
    winter_bound,
    witness_chain,
)

__all__ = [
    "apply_t_transform",
    "apply_unjust_transfer",
    "averaging_map",
    "binary_entropy",
    "bound_conditional",
    "conditional_entropy",
    "conditional_vn_entropy",
    "ekr_recovery_bound",
    "erasure_capacity",
    "fan_norm",
    "feasible_projector_pair",
    "improvement_threshold",
    "isotropic_pair",
    "majorant_vector",
    "majorizes",
    "optimal_projector_pair",
    "q4",
    "r4_bound",
    "saturating_pair",
    "schatten_norm",
    "shannon_entropy",
    "t_transform_from_unjust",
    "trace_distance",
    "tv_distance",
    "two_projector_spectrum",
    "verify_bound",
    "von_neumann_entropy",
    "walk",
    "wilde_bound",
    "winter_bound",
    "witness_chain",
]

__version__ = "0.1.0"
