"""Markov chains indexed by a two-dimensional parameter (time, usage)."""

from ._biparam import (
    BiparamError,
    GeneratorMatrix,
    GoursatGrid,
    InversionConfig,
    TransitionMatrix,
    WaitingDistribution,
    WarrantyPolicy,
    ck_residual,
    compute_transition,
    expected_warranty_expense,
    extract_waiting_transforms,
    factorization_residual,
    factorization_residual_of,
    invert2d_matrix,
    invert2d_scalar,
    marginal_distribution,
    pde_transition,
    resolvent_at,
    series_transition,
    solve_goursat,
    survival,
    validate_generator,
    validate_policy,
    waiting_cdf_at,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
