"""
Orthonormal Laguerre, Jacobi and Gegenbauer polynomials in log-magnitude/sign form

All families are generated by the monic three-term recurrence

    sqrt(b_{j+1}) q_{j+1}(x) = (x - a_j) q_j(x) - sqrt(b_j) q_{j-1}(x)

with q_0 = 1, which yields polynomials orthonormal with respect to the weight
divided by its total mass. Values are rescaled on the fly so that degree and
parameter can both reach the thousands without overflow.
"""

from enum import Enum
from typing import NamedTuple

import numpy as np
from numpy.typing import ArrayLike, NDArray

from src.core.specfun.gamma import log_jacobi_mass, log_laguerre_mass
from src.core.specfun.log_value import LogValue
from src.exceptions import DomainError

_RESCALE_HIGH = 1e100
_RESCALE_LOW = 1e-100


class PolyFamily(str, Enum):
    """Classical weight families"""

    LAGUERRE = "laguerre"  # x^α e^{-x} on [0, ∞)
    JACOBI = "jacobi"  # (1-y)^a (1+y)^b on [-1, 1]


class OrthoValues(NamedTuple):
    """Vectorized log-magnitudes and signs of p̃_k, p̃_k' and p̃_{k-1}"""

    log_value: NDArray[np.float64]
    sign: NDArray[np.float64]
    log_derivative: NDArray[np.float64]
    derivative_sign: NDArray[np.float64]
    log_previous: NDArray[np.float64]
    previous_sign: NDArray[np.float64]


def validate_parameters(family: PolyFamily, params: tuple[float, ...]) -> None:
    """Raise DomainError unless the weight is integrable"""
    if family is PolyFamily.LAGUERRE:
        if len(params) != 1:
            raise DomainError(f"laguerre takes one parameter, got {params}")
        if not params[0] > -1.0:
            raise DomainError(f"laguerre parameter must exceed -1, got {params[0]}")
    elif family is PolyFamily.JACOBI:
        if len(params) != 2:
            raise DomainError(f"jacobi takes two parameters, got {params}")
        if not (params[0] > -1.0 and params[1] > -1.0):
            raise DomainError(f"jacobi parameters must exceed -1, got {params}")
    else:
        raise DomainError(f"unknown polynomial family {family!r}")


def log_mass(family: PolyFamily, params: tuple[float, ...]) -> float:
    """ln of the total mass μ0 of the weight function"""
    if family is PolyFamily.LAGUERRE:
        return log_laguerre_mass(params[0])
    return log_jacobi_mass(params[0], params[1])


def recurrence_coefficients(
    family: PolyFamily, params: tuple[float, ...], size: int
) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    """Monic recurrence coefficients a_0..a_{size-1} and b_0..b_{size-1}

    b_0 is returned as 0; the mass μ0 is kept separately by log_mass.
    """
    validate_parameters(family, params)
    k = np.arange(size, dtype=np.float64)

    if family is PolyFamily.LAGUERRE:
        alpha = params[0]
        a = 2.0 * k + alpha + 1.0
        b = k * (k + alpha)
        b[0] = 0.0
        return a, b

    pa, pb = params
    s = pa + pb
    two_k = 2.0 * k + s
    a = np.empty(size, dtype=np.float64)
    b = np.zeros(size, dtype=np.float64)
    if size == 0:
        return a, b

    a[0] = (pb - pa) / (s + 2.0)
    if size > 1:
        tk = two_k[1:]
        a[1:] = (pb - pa) * s / (tk * (tk + 2.0))
        b[1] = 4.0 * (pa + 1.0) * (pb + 1.0) / ((s + 2.0) ** 2 * (s + 3.0))
    if size > 2:
        kk = k[2:]
        tk = two_k[2:]
        b[2:] = (
            4.0
            * kk
            * (kk + pa)
            * (kk + pb)
            * (kk + s)
            / (tk**2 * (tk + 1.0) * (tk - 1.0))
        )
    return a, b


def scaled_recurrence(
    a: NDArray[np.float64],
    b: NDArray[np.float64],
    degree: int,
    x: NDArray[np.float64],
) -> tuple[
    NDArray[np.float64],
    NDArray[np.float64],
    NDArray[np.float64],
    NDArray[np.float64],
]:
    """Run the orthonormal recurrence to `degree` with a per-point common scale"""
    p_prev = np.zeros_like(x)
    p = np.ones_like(x)
    d_prev = np.zeros_like(x)
    d = np.zeros_like(x)
    log_scale = np.zeros_like(x)
    sqrt_b = np.sqrt(b)

    for j in range(degree):
        shift = x - a[j]
        p_next = (shift * p - sqrt_b[j] * p_prev) / sqrt_b[j + 1]
        d_next = (shift * d + p - sqrt_b[j] * d_prev) / sqrt_b[j + 1]
        p_prev, p = p, p_next
        d_prev, d = d, d_next

        size = np.maximum(np.abs(p), np.abs(p_prev))
        rescale = (size > _RESCALE_HIGH) | ((size < _RESCALE_LOW) & (size > 0.0))
        if np.any(rescale):
            factor = np.where(rescale, size, 1.0)
            p = p / factor
            p_prev = p_prev / factor
            d = d / factor
            d_prev = d_prev / factor
            log_scale = log_scale + np.log(factor)

    return p, p_prev, d, log_scale


def _signed_log(
    values: NDArray[np.float64], log_scale: NDArray[np.float64]
) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    with np.errstate(divide="ignore"):
        logs = np.log(np.abs(values)) + log_scale
    signs = np.sign(values)
    return np.where(signs == 0, -np.inf, logs), signs


def orthonormal_values(
    family: PolyFamily,
    params: tuple[float, ...],
    degree: int,
    x: ArrayLike,
    normalized: bool = True,
) -> OrthoValues:
    """Evaluate p̃_degree, its derivative and p̃_{degree-1} at every point of x

    Args:
        family: weight family
        params: (α,) for Laguerre, (a, b) for Jacobi
        degree: polynomial degree k ≥ 0
        x: evaluation points
        normalized: orthonormal w.r.t. the weight itself (True) or w.r.t. the
            weight divided by its mass (False)

    Returns:
        OrthoValues with arrays shaped like x
    """
    if degree < 0:
        raise DomainError(f"polynomial degree must be non-negative, got {degree}")
    points = np.atleast_1d(np.asarray(x, dtype=np.float64))
    a, b = recurrence_coefficients(family, params, degree + 1)
    p, p_prev, d, log_scale = scaled_recurrence(a, b, degree, points)

    log_value, sign = _signed_log(p, log_scale)
    log_derivative, derivative_sign = _signed_log(d, log_scale)
    log_previous, previous_sign = _signed_log(p_prev, log_scale)

    shift = 0.5 * log_mass(family, params) if normalized else 0.0
    if family is PolyFamily.LAGUERRE:
        # standard Laguerre sign: leading coefficient (-1)^k / k!
        flip = -1.0 if degree % 2 else 1.0
        sign = flip * sign
        derivative_sign = flip * derivative_sign
        previous_sign = -flip * previous_sign

    return OrthoValues(
        log_value - shift,
        sign,
        log_derivative - shift,
        derivative_sign,
        log_previous - shift,
        previous_sign,
    )


def _scalar(values: OrthoValues) -> LogValue:
    return LogValue(float(values.log_value[0]), int(values.sign[0]))


def orthonormal_laguerre(k: int, alpha: float, x: float) -> LogValue:
    """L̃_k^{(α)}(x), orthonormal w.r.t. x^α e^{-x} on [0, ∞)"""
    return _scalar(orthonormal_values(PolyFamily.LAGUERRE, (alpha,), k, x))


def gegenbauer_parameters(alpha: float) -> tuple[float, float]:
    """Jacobi parameters (α-1/2, α-1/2) of the Gegenbauer weight (1-x²)^{α-1/2}"""
    if not alpha > -0.5:
        raise DomainError(f"gegenbauer parameter must exceed -1/2, got {alpha}")
    if alpha == 0:
        raise DomainError("gegenbauer parameter must be nonzero")
    return (alpha - 0.5, alpha - 0.5)


def orthonormal_gegenbauer(k: int, alpha: float, x: float) -> LogValue:
    """C̃_k^{(α)}(x), orthonormal w.r.t. (1-x²)^{α-1/2} on [-1, 1]"""
    return _scalar(
        orthonormal_values(PolyFamily.JACOBI, gegenbauer_parameters(alpha), k, x)
    )


def orthonormal_jacobi(k: int, a: float, b: float, x: float) -> LogValue:
    """P̃_k^{(a,b)}(x), orthonormal w.r.t. (1-x)^a (1+x)^b on [-1, 1]"""
    return _scalar(orthonormal_values(PolyFamily.JACOBI, (a, b), k, x))


def log_abs_polynomial(
    family: PolyFamily, params: tuple[float, ...], degree: int, x: ArrayLike
) -> NDArray[np.float64]:
    """ln|p̃_degree(x)| only; value-only path used by the density kernels"""
    if degree == 0:
        points = np.atleast_1d(np.asarray(x, dtype=np.float64))
        return np.full_like(points, -0.5 * log_mass(family, params))
    return orthonormal_values(family, params, degree, x).log_value
