"""Density, measure, removal and Riesz decomposition diagnostics for frames on finite windows."""

from ._core import (
    FrameBounds,
    PreconditionError,
    RieszCheck,
    TruncationError,
    canonical_dual,
    decompose,
    density_profile,
    eps_riesz_check,
    finite_gabor,
    frame_bounds,
    frame_operator,
    gaussian_window,
    gram,
    list_scenarios,
    measure_profile,
    parseval,
    pinv_decay_rate,
    positive_density_removal,
    random_unitary,
    remove_and_bounds,
    removal_rho,
    riesz_check,
    run_scenario,
    self_dual_products,
    synthetic_localized_frame,
    union_of_onbs,
)

__version__ = "0.1.0"
