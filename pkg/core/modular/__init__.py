from core.modular.bigcomplex import (
    A_Q_EXPANSION,
    BigComplexCtx,
    a_of_tau,
    a_series,
    j_cubic_residual,
    j_from_a,
    j_of_tau,
    lambda_std,
    sigma_involution,
    theta2,
    theta3,
    theta4,
)
from core.modular.polynomial import (
    RationalPoly,
    fD_polynomial,
    fd_with_retry,
    prototype_points,
    reconstruct_rational,
)

__all__ = [
    "A_Q_EXPANSION",
    "BigComplexCtx",
    "RationalPoly",
    "a_of_tau",
    "a_series",
    "fD_polynomial",
    "fd_with_retry",
    "j_cubic_residual",
    "j_from_a",
    "j_of_tau",
    "lambda_std",
    "prototype_points",
    "reconstruct_rational",
    "sigma_involution",
    "theta2",
    "theta3",
    "theta4",
]
