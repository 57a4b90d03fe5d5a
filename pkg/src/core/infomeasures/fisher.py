"""
Fisher information F = ∫|∇ρ|²/ρ of hydrogenic and oscillator states

Three independent routes are provided:

- closed forms in (η, L, |m|)
- the moment identity F[ρ] = 4⟨p²⟩ - 2|m|(2l+D-2)⟨r^{-2}⟩ (and its momentum
  mirror) evaluated with quadrature moments
- direct quadrature of the radial gradient functional for l = 0 states
"""

import math

import numpy as np
from numpy.typing import NDArray

from src.config import get_settings
from src.core.integration.factor_integrator import NodeSet, WeightedIntegrand, integrate
from src.core.moments.models import MeasureValue
from src.core.moments.radial import quadrature_moment
from src.core.specfun.polynomials import PolyFamily, log_mass, orthonormal_values
from src.core.states.densities import radial_density
from src.core.states.models import QuantumState, Space
from src.exceptions import NotAvailableError


def fisher_closed(state: QuantumState, space: Space | str) -> float:
    """Exact Fisher information of the position or momentum density"""
    space = Space(space)
    m = state.m
    eta = state.eta
    if state.is_hydrogenic:
        Z = state.strength
        if space is Space.POSITION:
            return 4.0 * Z**2 / eta**3 * (eta - m)
        big_l = state.big_l
        return (
            2.0
            * eta**2
            / Z**2
            * (
                5.0 * eta**2
                - 3.0 * big_l * (big_l + 1.0)
                - m * (8.0 * eta - 6.0 * big_l - 3.0)
                + 1.0
            )
        )

    lam = state.strength
    value = 4.0 * (eta - m + 1.5)
    return value * lam if space is Space.POSITION else value / lam


def fisher_via_moments(state: QuantumState, space: Space | str) -> MeasureValue:
    """
    Fisher information from pairs of radial expectation values

    F[ρ] = 4⟨p²⟩ - 2|m|(2l+D-2)⟨r^{-2}⟩ and F[γ] = 4⟨r²⟩ - 2|m|(2l+D-2)⟨p^{-2}⟩,
    with every moment computed by quadrature.
    """
    space = Space(space)
    m = state.m
    second = quadrature_moment(state, space.dual, 2.0)
    value = 4.0 * second.value
    result = MeasureValue(
        value=value,
        method=second.method,
        abs_error_estimate=4.0 * second.abs_error_estimate,
        converged=second.converged,
        nodes_used=second.nodes_used,
    )
    if m == 0:
        return result

    coefficient = 2.0 * m * (2 * state.l + state.dimension - 2)
    inverse = quadrature_moment(state, space, -2.0)
    return MeasureValue(
        value=value - coefficient * inverse.value,
        method=result.method,
        abs_error_estimate=result.abs_error_estimate
        + coefficient * inverse.abs_error_estimate,
        converged=result.converged and inverse.converged,
        nodes_used=result.nodes_used + inverse.nodes_used,
    )


def fisher_direct(state: QuantumState, space: Space | str) -> MeasureValue:
    """
    Gradient functional ∫(R')²/R r^{D-1} dr by quadrature, for l = 0 states

    With l = 0 the angular density is uniform and contributes nothing, and
    P (d ln R/du)² (du/dr)² collapses to a weight times a squared polynomial:

        Laguerre  τ²/scale² · u^{a+2(τ-1)/τ} e^{-u} (2p̃' - p̃)²
        Jacobi    1/scale² · (1-y)^{a+1} (1+y)^{b+1} ((l+D+1) p̃ + 2(1+y) p̃')²

    Raises:
        NotAvailableError: l > 0
    """
    space = Space(space)
    if state.l != 0:
        raise NotAvailableError(
            f"direct gradient quadrature needs l = 0, got l = {state.l}"
        )
    density = radial_density(state, space)
    family = density.family
    params = density.poly_params
    degree = density.degree

    if family is PolyFamily.LAGUERRE:
        tau = density.tau
        exponents = (density.weight_exponents[0] + 2.0 * (tau - 1) / tau,)
        log_const = density.log_weight_const + 2.0 * math.log(tau / density.scale)

        def squared_gradient(nodes: NodeSet) -> NDArray[np.float64]:
            values = orthonormal_values(family, params, degree, nodes.u, normalized=False)
            p = values.sign * np.exp(values.log_value)
            dp = values.derivative_sign * np.exp(values.log_derivative)
            return (2.0 * dp - p) ** 2

    else:
        exponents = tuple(e + 1.0 for e in density.weight_exponents)
        log_const = density.log_weight_const - 2.0 * math.log(density.scale)
        upper = density.density_exponents[1]

        def squared_gradient(nodes: NodeSet) -> NDArray[np.float64]:
            values = orthonormal_values(family, params, degree, nodes.u, normalized=False)
            p = values.sign * np.exp(values.log_value)
            dp = values.derivative_sign * np.exp(values.log_derivative)
            return (upper * p + 2.0 * (1.0 + nodes.u) * dp) ** 2

    integrand = WeightedIntegrand(
        family=family,
        exponents=exponents,
        poly_params=params,
        degree=0,
        power=0.0,
        # polynomials are evaluated against the unit-mass weight
        log_const=log_const - log_mass(family, params),
    )
    settings = get_settings()
    result = integrate(
        integrand,
        squared_gradient,
        min_nodes=max(settings.quadrature_min_nodes, degree + 2),
    )
    return MeasureValue.from_quadrature(result)
