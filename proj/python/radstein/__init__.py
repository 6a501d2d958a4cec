"""Stein-method bounds and chaos tooling for Rademacher functionals."""

from _radstein import (
    ChaosExpansion,
    Kernel,
    chaos_multiply,
    chaos_q_bound,
    comb_phi_psi,
    contraction_norm,
    exact_dK_weighted_sum,
    expected_trace,
    fcp_build,
    first_chaos_bound,
    fourth_moment_J2,
    malliavin_stein_terms,
    necessary_statistic,
    pure_chaos,
    run_identity_suite,
    sum12_bound,
    trace_kernel,
    two_runs_bound,
    two_runs_variance,
)

__all__ = [
    "ChaosExpansion",
    "Kernel",
    "chaos_multiply",
    "chaos_q_bound",
    "comb_phi_psi",
    "contraction_norm",
    "exact_dK_weighted_sum",
    "expected_trace",
    "fcp_build",
    "first_chaos_bound",
    "fourth_moment_J2",
    "malliavin_stein_terms",
    "necessary_statistic",
    "pure_chaos",
    "run_identity_suite",
    "sum12_bound",
    "trace_kernel",
    "two_runs_bound",
    "two_runs_variance",
]
