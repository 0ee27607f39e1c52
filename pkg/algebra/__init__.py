"""
精确代数内核：有理数系数的稀疏 Laurent 多项式、截断幂级数与有理函数
"""

from algebra.compare import compare_family, compare_values
from algebra.errors import (
    CoefficientNotExactError,
    ManifestError,
    NonUnitError,
    PoleError,
    PreconditionError,
    ProfileTooSmallError,
    QVerifyError,
    RegistryMismatchError,
    SubstitutionError,
    UnknownIdentityError,
)
from algebra.outcome import Status, VerificationOutcome, Witness
from algebra.ratfun import RationalFunction, divide_series_by_poly, ratfun_equal
from algebra.registry import TruncationProfile, VarRegistry, term_key
from algebra.scalar import Scalar, format_scalar, to_scalar
from algebra.series import (
    TruncatedSeries,
    divide_by_one_minus,
    series_add,
    series_coeff,
    series_equal,
    series_invert,
    series_mul,
    series_substitute,
)
from algebra.sparse_poly import SparsePoly

__all__ = [
    "CoefficientNotExactError", "ManifestError", "NonUnitError", "PoleError",
    "PreconditionError", "ProfileTooSmallError", "QVerifyError", "RegistryMismatchError",
    "SubstitutionError", "UnknownIdentityError",
    "compare_family", "compare_values",
    "Status", "VerificationOutcome", "Witness",
    "RationalFunction", "divide_series_by_poly", "ratfun_equal",
    "TruncationProfile", "VarRegistry", "term_key",
    "Scalar", "format_scalar", "to_scalar",
    "TruncatedSeries", "divide_by_one_minus", "series_add", "series_coeff", "series_equal",
    "series_invert", "series_mul", "series_substitute",
    "SparsePoly",
]
