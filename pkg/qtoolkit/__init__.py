"""
q-组合构件：Pochhammer 符号、q-二项式系数、Rogers-Szegő 多项式、基本超几何级数与 theta 和
"""

from qtoolkit.binomial import q_binomial, rogers_szego, tau_factor
from qtoolkit.hypergeometric import nested_sum, phi_series, terminating_length
from qtoolkit.pochhammer import (
    PochSpec,
    div_factor,
    div_poch,
    inv_poch_rf,
    mul_factor,
    mul_poch,
    poch_finite,
    poch_infinite,
    poch_poly,
    poch_ratio_rf,
    poch_rf,
    poch_series,
)
from qtoolkit.theta import (
    A_POWER,
    PENTAGONAL_PAIR,
    jacobi_triple_series,
    neg_shift_pochhammer,
    partial_theta,
    theta_reach,
)

__all__ = [
    "PochSpec", "poch_finite", "poch_infinite", "mul_poch", "div_poch", "mul_factor", "div_factor",
    "poch_poly", "poch_rf", "inv_poch_rf", "poch_ratio_rf", "poch_series",
    "q_binomial", "tau_factor", "rogers_szego",
    "phi_series", "terminating_length", "nested_sum",
    "A_POWER", "PENTAGONAL_PAIR", "theta_reach", "partial_theta", "jacobi_triple_series", "neg_shift_pochhammer",
]
