"""
T_{r,n}(s) 有限和及第二节的有限恒等式
"""

from finite.finite_checks import (
    FIN_Q_REGISTRY,
    chu_vandermonde_family,
    finite_q_family,
    finite_q_sides,
    recurrence_residual,
    t_recurrence_family,
    t_specialize_family,
    verify_chu_vandermonde_evals,
    verify_finite_q_identity,
    verify_t_recurrence,
)
from finite.t_sum import T_REGISTRY, TSumSpec, recurrence_coefficients, t_closed_s0, t_closed_s1, t_sum

__all__ = [
    "T_REGISTRY", "TSumSpec", "t_sum", "t_closed_s1", "t_closed_s0", "recurrence_coefficients",
    "FIN_Q_REGISTRY", "recurrence_residual", "verify_t_recurrence", "t_recurrence_family",
    "chu_vandermonde_family", "verify_chu_vandermonde_evals", "t_specialize_family",
    "finite_q_sides", "finite_q_family", "verify_finite_q_identity",
]
