"""Special functions, orthonormal polynomials and Gaussian quadrature"""

from .gamma import log_beta, log_gamma, log_jacobi_mass, log_solid_angle
from .log_value import LogValue
from .polynomials import (
    PolyFamily,
    orthonormal_gegenbauer,
    orthonormal_jacobi,
    orthonormal_laguerre,
    orthonormal_values,
)
from .quadrature import QuadratureRule, gauss_rule, get_rule_cache, polynomial_zeros

__all__ = [
    "LogValue",
    "PolyFamily",
    "QuadratureRule",
    "gauss_rule",
    "get_rule_cache",
    "log_beta",
    "log_gamma",
    "log_jacobi_mass",
    "log_solid_angle",
    "orthonormal_gegenbauer",
    "orthonormal_jacobi",
    "orthonormal_laguerre",
    "orthonormal_values",
    "polynomial_zeros",
]
