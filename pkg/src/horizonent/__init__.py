"""Correlations of a two-mode squeezed field split by a black-hole horizon.

Closed-form Gaussian-state calculations of how bipartite entanglement
and classical correlations degrade for observers confined outside a
Schwarzschild horizon, and how the loss is recovered as multipartite
entanglement across it.  Ships a CLI (``horizonent``) for single-point
evaluation, parameter sweeps and figure-grid reproduction.
"""

from ._kernels import BACKEND_NAME as kernel_backend
from .correlations import (
    CorrelationReport,
    build_report,
    contangle_g,
    entropy_f,
    in_out_contangle,
    kruskal_entanglement,
    kruskal_mutual_information,
    one_vs_three_contangle,
    out_out_contangle,
    out_out_contangle_inf_squeezing,
    out_out_mutual_information,
    residual_contangle,
    tripartite_upper_bound,
)
from .errors import (
    DegenerateInputError,
    HorizonentError,
    InvalidArgumentError,
    InvalidStateError,
)
from .fock import TruncatedTwoModeState, reduced_spectrum, second_moments, truncated_tms
from .gaussian import (
    CovarianceMatrix,
    SymplecticMatrix,
    SymplecticSpectrum,
    apply_symplectic,
    is_pure,
    partial_trace,
    symplectic_eigenvalues,
    symplectic_form,
    two_mode_squeezer,
)
from .horizon import (
    HorizonParams,
    SqueezingTriple,
    critical_mass,
    effective_squeezings,
    squeezing_parameter,
    survives_at_infinite_squeezing,
    triple_from_horizon,
)
from .states import (
    FOUR_MODE_ORDER,
    Mode,
    kruskal_state,
    schwarzschild_state_blocks,
    schwarzschild_state_product,
)

__version__ = "0.1.0"

__all__ = [
    "CorrelationReport",
    "CovarianceMatrix",
    "DegenerateInputError",
    "FOUR_MODE_ORDER",
    "HorizonParams",
    "HorizonentError",
    "InvalidArgumentError",
    "InvalidStateError",
    "Mode",
    "SqueezingTriple",
    "SymplecticMatrix",
    "SymplecticSpectrum",
    "TruncatedTwoModeState",
    "apply_symplectic",
    "build_report",
    "contangle_g",
    "critical_mass",
    "effective_squeezings",
    "entropy_f",
    "in_out_contangle",
    "is_pure",
    "kernel_backend",
    "kruskal_entanglement",
    "kruskal_mutual_information",
    "kruskal_state",
    "one_vs_three_contangle",
    "out_out_contangle",
    "out_out_contangle_inf_squeezing",
    "out_out_mutual_information",
    "partial_trace",
    "reduced_spectrum",
    "residual_contangle",
    "schwarzschild_state_blocks",
    "schwarzschild_state_product",
    "second_moments",
    "squeezing_parameter",
    "survives_at_infinite_squeezing",
    "symplectic_eigenvalues",
    "symplectic_form",
    "triple_from_horizon",
    "tripartite_upper_bound",
    "truncated_tms",
    "two_mode_squeezer",
]
