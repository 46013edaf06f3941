"""Finite biorthogonal polynomial pair M_n / Mfrak_n: exact construction,
moment functionals, transforms and an identity audit."""
from .families import (
    FamilyId,
    ParameterError,
    ParamSet,
    build,
    classic_m,
    finite_m,
    finite_mfrak,
    hyp_terminating,
    jacobi_j,
    jacobi_k,
    konhauser_y,
    konhauser_z,
    make_M,
    make_Mfrak,
)
from .inner import DivergentError, WeightSpec, inner, verify_Mort
from .poly import Polynomial, TruncSeries, series_compose, series_pow
from .report import Mode, ResidualReport, Verdict
from .scalar import PoleError, beta_moment_ratio, delta_params, log_gamma_complex, pochhammer

__all__ = [
    "DivergentError", "FamilyId", "Mode", "ParamSet", "ParameterError", "PoleError", "Polynomial",
    "ResidualReport", "TruncSeries", "Verdict", "WeightSpec", "beta_moment_ratio", "build",
    "classic_m", "delta_params", "finite_m", "finite_mfrak", "hyp_terminating", "inner",
    "jacobi_j", "jacobi_k", "konhauser_y", "konhauser_z", "log_gamma_complex", "make_M",
    "make_Mfrak", "pochhammer", "series_compose", "series_pow", "verify_Mort",
]
