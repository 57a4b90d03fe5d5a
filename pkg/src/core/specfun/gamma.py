"""
Log-gamma family used by every normalization constant
"""

import math

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy.special import betaln, digamma, gammaln

from src.exceptions import DomainError

LOG_PI = math.log(math.pi)
LOG_TWO_PI = math.log(2.0 * math.pi)


def log_gamma(x: float) -> float:
    """ln Γ(x) for x > 0"""
    if not x > 0:
        raise DomainError(f"log_gamma requires x > 0, got {x}")
    return float(gammaln(x))


def log_beta(a: float, b: float) -> float:
    """ln B(a, b) for a, b > 0"""
    if not (a > 0 and b > 0):
        raise DomainError(f"log_beta requires a, b > 0, got ({a}, {b})")
    return float(betaln(a, b))


def log_laguerre_mass(alpha: float) -> float:
    """ln ∫₀^∞ x^α e^{-x} dx = ln Γ(α+1)"""
    return log_gamma(alpha + 1.0)


def log_jacobi_mass(a: float, b: float) -> float:
    """ln ∫₋₁¹ (1-y)^a (1+y)^b dy = ln(2^{a+b+1} B(a+1, b+1))"""
    return (a + b + 1.0) * math.log(2.0) + log_beta(a + 1.0, b + 1.0)


def log_symmetric_mass(beta: ArrayLike) -> NDArray[np.float64]:
    """ln ∫₋₁¹ (1-t²)^β dt = ln B(1/2, β+1), vectorized over β"""
    values = np.asarray(beta, dtype=np.float64)
    if np.any(values <= -1.0):
        raise DomainError("symmetric mass requires β > -1")
    return np.asarray(betaln(0.5, values + 1.0), dtype=np.float64)


def mean_log_one_minus_square(beta: ArrayLike) -> NDArray[np.float64]:
    """⟨ln(1-t²)⟩ under the normalized weight (1-t²)^β, vectorized over β"""
    values = np.asarray(beta, dtype=np.float64)
    return np.asarray(digamma(values + 1.0) - digamma(values + 1.5), dtype=np.float64)


def log_solid_angle(dimension: int) -> float:
    """ln Ω_{D-1} = ln(2 π^{D/2} / Γ(D/2)), the area of the unit sphere in D dimensions"""
    if dimension < 1:
        raise DomainError(f"dimension must be positive, got {dimension}")
    return math.log(2.0) + 0.5 * dimension * LOG_PI - log_gamma(0.5 * dimension)


def power_limit(x: float, tolerance: float = 1e-12) -> float:
    """x^{1/(x-1)}, continued by its limit e at x = 1"""
    if x <= 0:
        raise DomainError(f"power_limit requires x > 0, got {x}")
    if abs(x - 1.0) < tolerance:
        return math.e
    return math.exp(math.log(x) / (x - 1.0))
