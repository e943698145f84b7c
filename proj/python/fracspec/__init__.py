"""Toeplitz discretization of the one-dimensional fractional Schroedinger operator."""

from ._fracspec import (  # noqa: F401
    ConvergenceError,
    DomainError,
    StableParams,
    assemble,
    asymptote_study,
    catalan,
    digamma,
    integrate,
    jacobi_eigen,
    kernel,
    lobachevsky,
    log_gamma,
    logf_coeff0_closed,
    logf_coeff_closed,
    logf_coeff_quadrature,
    lu_logdet,
    run_cli,
    spectral_report,
    symbol_closed,
    symbol_curve,
    symbol_period,
    szego_report,
    weight_binomial,
    weight_partial_sum,
    weights,
)

__version__ = "0.1.0"
