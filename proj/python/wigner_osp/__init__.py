"""Wigner quantization of H = xp and the free particle on the osp(1|2)
positive discrete series: operator matrices, orthogonal-polynomial
eigenvector coefficients, and generalized wave functions."""

from ._core import (  # noqa: F401
    DomainError,
    ConvergenceError,
    abs_gamma,
    alpha_coeffs,
    beta_coeffs,
    delta_kernel,
    eigen_residual,
    epsilon_coeffs,
    even_triple,
    gamma_coeffs,
    gamma_complex,
    genhermite_eval,
    gram_matrix,
    hyp0f1,
    inner_p_u,
    inner_x_p,
    inner_x_u,
    inner_x_z,
    intseries_pair,
    jagannathan_pair,
    kernel_p_z,
    ladder_ops,
    laguerre_eval,
    lambda_check,
    mp_eval,
    observable,
    phase_c0,
    phase_c1,
    pochhammer_rising,
    psi_bk,
    psi_free,
    recurrence_eval,
    relation_report,
    run_acceptance,
    terminating_1f1,
    terminating_2f1,
)

__version__ = "0.1.0"
