"""Numerical laboratory for discrete and analog quantum search.

The discrete engine U_G = U_s U_f, the analog evolution under
H = E(P_w + P_s - I), the product-formula bridge between them, and a
sum-over-paths propagator, all with exact two-level closed forms that
carry N far past what dense matrices allow.
"""

from .gfg import (
    GfgEvolution,
    gfg_matrix,
    gfg_propagator_exact,
    gfg_state,
    gfg_success_prob,
    optimal_time,
)
from .grover import (
    GroverAngles,
    SearchInstance,
    basis_overlaps,
    engine_success_prob,
    grover_angles,
    grover_operators_dense,
    grover_state_dense,
    grover_success_prob,
)
from .pathsum import (
    PathSumSpec,
    convergence_study,
    path_amplitude,
    propagator_bruteforce,
    propagator_sliced,
    slice_matrix,
)
from .trotter import (
    CompareResult,
    DigitizationPlan,
    TrotterErrorSample,
    compare_probabilities,
    digitized_engine,
    exp_projector,
    resonant_error_scan,
    select_params,
    semiclassical_sweep,
    trotter_error_scan,
    trotter_product,
)

__version__ = "0.1.0"

__all__ = [
    "CompareResult",
    "DigitizationPlan",
    "GfgEvolution",
    "GroverAngles",
    "PathSumSpec",
    "SearchInstance",
    "TrotterErrorSample",
    "basis_overlaps",
    "compare_probabilities",
    "convergence_study",
    "digitized_engine",
    "engine_success_prob",
    "exp_projector",
    "gfg_matrix",
    "gfg_propagator_exact",
    "gfg_state",
    "gfg_success_prob",
    "grover_angles",
    "grover_operators_dense",
    "grover_state_dense",
    "grover_success_prob",
    "optimal_time",
    "path_amplitude",
    "propagator_bruteforce",
    "propagator_sliced",
    "resonant_error_scan",
    "select_params",
    "semiclassical_sweep",
    "slice_matrix",
    "trotter_error_scan",
    "trotter_product",
    "__version__",
]
