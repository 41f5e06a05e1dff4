"""Precision bounds for two-channel interferometry with Gaussian probes.

Quantum Fisher information matrices for simultaneous estimation of all four
parameters of a general two-mode linear interferometer, with two-mode
squeezed and single-mode squeezed probe families, closed forms, asymptotic
scaling laws, probe optimization and a truncated-Fock-space oracle.
"""

from .interferometer import (
    ParamVector,
    SYMPLECTIC_FORM,
    build_unitary,
    bs_unitary,
    decompose_factors,
    symplectic_from_unitary,
    unitary_derivatives,
)
from .gaussian import (
    GaussianState,
    PhysicalityReport,
    ResourceBudget,
    SmssProbe,
    TmssProbe,
    check_physical,
    evolve,
    mean_photon_number,
    probe_state,
    smss_probe_from_budget,
    smss_state,
    tmss_probe_from_budget,
    tmss_state,
)
from .qfim import (
    BoundsReport,
    ConditioningError,
    Qfim,
    moment_derivatives,
    qcrb_bounds,
    qfim_numeric,
    scalar_bound_asymptotic,
    smss_cov_qfim,
    smss_cov_qfim_general,
    smss_qfim_asymptotic,
    tmss_cov_qfim,
    tmss_disp_qfim,
    tmss_qfim_asymptotic,
)

__version__ = "0.1.0"

__all__ = [
    "ParamVector",
    "SYMPLECTIC_FORM",
    "build_unitary",
    "bs_unitary",
    "decompose_factors",
    "symplectic_from_unitary",
    "unitary_derivatives",
    "GaussianState",
    "PhysicalityReport",
    "ResourceBudget",
    "SmssProbe",
    "TmssProbe",
    "check_physical",
    "evolve",
    "mean_photon_number",
    "probe_state",
    "smss_probe_from_budget",
    "smss_state",
    "tmss_probe_from_budget",
    "tmss_state",
    "BoundsReport",
    "ConditioningError",
    "Qfim",
    "moment_derivatives",
    "qcrb_bounds",
    "qfim_numeric",
    "scalar_bound_asymptotic",
    "smss_cov_qfim",
    "smss_cov_qfim_general",
    "smss_qfim_asymptotic",
    "tmss_cov_qfim",
    "tmss_disp_qfim",
    "tmss_qfim_asymptotic",
    "__version__",
]
