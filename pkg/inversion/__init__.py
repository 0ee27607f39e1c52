"""
矩阵反演对与 λ_n(a) 展开系数
"""

from inversion.kernels import (
    TriangularKernel,
    as_rational,
    is_identity,
    kernel_carlitz,
    kernel_qsquare_binomial,
    multiply_kernels,
    triangular_solve,
)
from inversion.lambda_coeffs import (
    lambda_by_inverse_kernel,
    lambda_by_inversion,
    lambda_coeffs,
    lambda_generating,
    lambda_oracle,
    lambda_rational,
)

__all__ = [
    "TriangularKernel", "as_rational", "is_identity", "kernel_carlitz", "kernel_qsquare_binomial",
    "multiply_kernels", "triangular_solve",
    "lambda_coeffs", "lambda_rational", "lambda_generating", "lambda_oracle",
    "lambda_by_inversion", "lambda_by_inverse_kernel",
]
