"""
Shannon, Rényi and Tsallis entropies and the disequilibrium

Both |Ψ|² and the volume element factorize into a radial part, D-2 Gegenbauer
factors and the azimuth, so ln ∫ρ^q and -∫ρ ln ρ are sums of one-dimensional
contributions. Gegenbauer factors of degree zero (μ_j = μ_{j+1}) have closed
forms in terms of beta and digamma functions; the rest go through quadrature.
"""

import math
from dataclasses import dataclass

import numpy as np
from loguru import logger

from src.config import get_settings
from src.core.integration.factor_integrator import QuadratureResult
from src.core.integration.functionals import log_entropic_moment, shannon_integral
from src.core.moments.models import MeasureValue, Method
from src.core.specfun.gamma import log_symmetric_mass, mean_log_one_minus_square
from src.core.states.angular import AngularFactor, angular_factor
from src.core.states.densities import radial_density
from src.core.states.models import QuantumState, Space
from src.exceptions import DomainError, LogValueOverflowError


@dataclass(frozen=True)
class PartValue:
    """One additive contribution with its diagnostics"""

    value: float
    method: Method
    abs_error_estimate: float = 0.0
    converged: bool = True
    nodes_used: int = 0

    @classmethod
    def from_quadrature(cls, result: QuadratureResult) -> "PartValue":
        return cls(
            value=result.value,
            method=Method.QUADRATURE,
            abs_error_estimate=result.abs_error,
            converged=result.converged,
            nodes_used=result.nodes_used,
        )

    @classmethod
    def from_log_moment(cls, result: QuadratureResult) -> "PartValue":
        """ln W with the relative change of W as its absolute error"""
        return cls(
            value=result.log_magnitude,
            method=Method.QUADRATURE,
            abs_error_estimate=result.relative_change,
            converged=result.converged,
            nodes_used=result.nodes_used,
        )

    def __add__(self, other: "PartValue") -> "PartValue":
        method = (
            Method.QUADRATURE
            if Method.QUADRATURE in (self.method, other.method)
            else Method.CLOSED_FORM
        )
        return PartValue(
            value=self.value + other.value,
            method=method,
            abs_error_estimate=self.abs_error_estimate + other.abs_error_estimate,
            converged=self.converged and other.converged,
            nodes_used=self.nodes_used + other.nodes_used,
        )


@dataclass(frozen=True)
class EntropyDecomposition:
    """Radial and angular parts of an entropy; q = 1 stands for Shannon"""

    radial: float
    angular: float
    q: float
    space: Space
    radial_method: Method
    angular_method: Method
    abs_error_estimate: float = 0.0
    converged: bool = True
    nodes_used: int = 0

    @property
    def total(self) -> float:
        return self.radial + self.angular

    @property
    def is_shannon(self) -> bool:
        return self.q == 1.0

    @property
    def method(self) -> Method:
        if Method.QUADRATURE in (self.radial_method, self.angular_method):
            return Method.QUADRATURE
        return Method.CLOSED_FORM

    def as_measure(self) -> MeasureValue:
        return MeasureValue(
            value=self.total,
            method=self.method,
            abs_error_estimate=self.abs_error_estimate,
            converged=self.converged,
            nodes_used=self.nodes_used,
        )


def _constant_factor_arrays(angular: AngularFactor) -> tuple[np.ndarray, np.ndarray]:
    constant = [f for f in angular.factors if f.is_constant_polynomial]
    beta = np.array([f.gegenbauer_alpha - 0.5 for f in constant], dtype=np.float64)
    mu = np.array([f.sine_power for f in constant], dtype=np.float64)
    return beta, mu


def angular_shannon(angular: AngularFactor) -> PartValue:
    """-∫|𝒴|² ln|𝒴|² dΩ"""
    beta, mu = _constant_factor_arrays(angular)
    closed = float(np.sum(log_symmetric_mass(beta) - mu * mean_log_one_minus_square(beta)))
    part = PartValue(closed + angular.log_azimuthal_mass, Method.CLOSED_FORM)
    for factor in angular.factors:
        if factor.is_constant_polynomial:
            continue
        result = shannon_integral(factor)
        part = part + PartValue.from_quadrature(result)
    return part


def angular_log_moment(angular: AngularFactor, q: float) -> PartValue:
    """ln ∫|𝒴|^{2q} dΩ"""
    beta, mu = _constant_factor_arrays(angular)
    closed = float(
        np.sum(-q * log_symmetric_mass(beta) + log_symmetric_mass(beta + (q - 1.0) * mu))
    )
    part = PartValue(closed + (1.0 - q) * angular.log_azimuthal_mass, Method.CLOSED_FORM)
    for factor in angular.factors:
        if factor.is_constant_polynomial:
            continue
        result = log_entropic_moment(factor, q)
        part = part + PartValue.from_log_moment(result)
    return part


def _radial_shannon(state: QuantumState, space: Space) -> PartValue:
    return PartValue.from_quadrature(shannon_integral(radial_density(state, space)))


def _radial_log_moment(state: QuantumState, space: Space, q: float) -> PartValue:
    return PartValue.from_log_moment(log_entropic_moment(radial_density(state, space), q))


def shannon(state: QuantumState, space: Space | str) -> EntropyDecomposition:
    """
    Shannon entropy S = -∫ρ ln ρ split into radial and angular parts

    Args:
        state: validated quantum state
        space: position or momentum

    Returns:
        EntropyDecomposition with q = 1
    """
    space = Space(space)
    radial = _radial_shannon(state, space)
    angular = angular_shannon(angular_factor(state))
    logger.debug(
        f"S[{space.value}] {state.label()}: radial {radial.value:.12g}, "
        f"angular {angular.value:.12g}"
    )
    return EntropyDecomposition(
        radial=radial.value,
        angular=angular.value,
        q=1.0,
        space=space,
        radial_method=radial.method,
        angular_method=angular.method,
        abs_error_estimate=radial.abs_error_estimate + angular.abs_error_estimate,
        converged=radial.converged and angular.converged,
        nodes_used=radial.nodes_used + angular.nodes_used,
    )


def _check_order(q: float) -> None:
    if not (math.isfinite(q) and q > 0):
        raise DomainError(f"Rényi order q must be a positive finite number, got {q}")


def is_shannon_order(q: float) -> bool:
    return abs(q - 1.0) < get_settings().renyi_shannon_switch


def renyi(state: QuantumState, space: Space | str, q: float) -> EntropyDecomposition:
    """
    Rényi entropy R_q = ln(∫ρ^q)/(1-q) split into radial and angular parts

    Orders within Settings.renyi_shannon_switch of 1 return the Shannon entropy.

    Raises:
        DivergentIntegralError: ∫ρ^q does not exist for this state and order
    """
    _check_order(q)
    space = Space(space)
    if is_shannon_order(q):
        return shannon(state, space)

    scale = 1.0 / abs(1.0 - q)
    radial = _radial_log_moment(state, space, q)
    angular = angular_log_moment(angular_factor(state), q)
    return EntropyDecomposition(
        radial=radial.value / (1.0 - q),
        angular=angular.value / (1.0 - q),
        q=q,
        space=space,
        radial_method=radial.method,
        angular_method=angular.method,
        abs_error_estimate=scale * (radial.abs_error_estimate + angular.abs_error_estimate),
        converged=radial.converged and angular.converged,
        nodes_used=radial.nodes_used + angular.nodes_used,
    )


def entropic_moment(state: QuantumState, space: Space | str, q: float) -> MeasureValue:
    """ln W_q = ln ∫ρ^q, the logarithm of the q-th entropic moment"""
    _check_order(q)
    space = Space(space)
    if q == 1.0:
        return MeasureValue.closed(0.0)
    radial = _radial_log_moment(state, space, q)
    angular = angular_log_moment(angular_factor(state), q)
    total = radial + angular
    return MeasureValue(
        value=total.value,
        method=total.method,
        abs_error_estimate=total.abs_error_estimate,
        converged=total.converged,
        nodes_used=total.nodes_used,
    )


def tsallis(state: QuantumState, space: Space | str, q: float) -> float:
    """T_q = (e^{(1-q)R_q} - 1)/(1-q); the Shannon entropy at q = 1"""
    entropy = renyi(state, space, q)
    if entropy.is_shannon:
        return entropy.total
    exponent = (1.0 - q) * entropy.total
    if exponent > 709.0:
        raise LogValueOverflowError(
            f"Tsallis entropy overflows: (1-q)R_q = {exponent:.6g} for {state.label()}"
        )
    return math.expm1(exponent) / (1.0 - q)


def disequilibrium(state: QuantumState, space: Space | str) -> float:
    """𝒟 = ∫ρ² = e^{-R_2}"""
    return math.exp(-renyi(state, space, 2.0).total)
