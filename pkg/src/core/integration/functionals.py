"""
Integral functionals of one-dimensional density factors

All functionals are written against the probability P(u) du of a
DensityFactor, so the same code serves the radial factor of every system and
each Gegenbauer factor of the hyperspherical harmonics:

    moment          ∫ P(u) u^shift du
    entropic moment W_q = ∫ P f^{q-1} du      (∫ f^q over the factor's measure)
    Shannon         S = -∫ P ln f du
"""

import numpy as np
from numpy.typing import NDArray

from src.core.integration.factor_integrator import (
    NodeSet,
    QuadratureResult,
    WeightedIntegrand,
    integrate,
)
from src.core.states.densities import DensityFactor
from src.exceptions import DivergentIntegralError


def probability_integrand(
    factor: DensityFactor,
    shift: tuple[float, ...] | None = None,
    log_const: float = 0.0,
) -> WeightedIntegrand:
    """P(u) as a weighted integrand, optionally times u-powers given by shift"""
    integrand = WeightedIntegrand(
        family=factor.family,
        exponents=factor.weight_exponents,
        poly_params=factor.poly_params,
        degree=factor.degree,
        power=1.0,
        rate=1.0,
        log_const=factor.log_weight_const + log_const,
    )
    if shift is not None:
        integrand = integrand.shifted(shift)
    return integrand


def moment_integral(
    factor: DensityFactor, shift: tuple[float, ...], log_const: float = 0.0
) -> QuadratureResult:
    """∫ P(u) · exp(log_const) · (endpoint powers given by shift) du"""
    integrand = probability_integrand(factor, shift, log_const)
    return integrate(integrand)


def entropic_integrand(factor: DensityFactor, q: float) -> WeightedIntegrand:
    """P f^{q-1} as a weighted integrand; raises when the integral diverges"""
    if not q > 0:
        raise DivergentIntegralError(f"entropic order q must be positive, got {q}")
    shift = q - 1.0
    exponents = tuple(
        w + shift * e
        for w, e in zip(factor.weight_exponents, factor.density_exponents, strict=True)
    )
    rate = 1.0 + shift * factor.density_rate
    if any(not e > -1.0 for e in exponents):
        raise DivergentIntegralError(
            f"∫ f^q diverges for q = {q:g}: endpoint exponents {exponents} "
            "must exceed -1"
        )
    return WeightedIntegrand(
        family=factor.family,
        exponents=exponents,
        poly_params=factor.poly_params,
        degree=factor.degree,
        power=q,
        rate=rate,
        log_const=factor.log_weight_const + shift * factor.log_density_const,
    )


def log_entropic_moment(factor: DensityFactor, q: float) -> QuadratureResult:
    """W_q = ∫ f^q of one factor, returned in log form"""
    return integrate(entropic_integrand(factor, q))


def shannon_integral(factor: DensityFactor) -> QuadratureResult:
    """-∫ P ln f du, the Shannon entropy of one factor"""

    def negative_log_density(nodes: NodeSet) -> NDArray[np.float64]:
        return -factor.log_density_from_parts(
            nodes.u, nodes.log_first, nodes.log_second, nodes.log_poly
        )

    return integrate(probability_integrand(factor), negative_log_density)

