"""
Tests for the log-domain factor integrator and the one-dimensional functionals
"""

import math

import numpy as np
import pytest
from scipy import integrate as scipy_integrate
from scipy.special import digamma, gammaln

from src.core.integration.factor_integrator import WeightedIntegrand, integrate
from src.core.integration.functionals import (
    entropic_integrand,
    log_entropic_moment,
    moment_integral,
    shannon_integral,
)
from src.core.specfun.polynomials import PolyFamily, orthonormal_laguerre
from src.core.states.densities import radial_density
from src.exceptions import DivergentIntegralError, NonConvergenceError


class TestFactorIntegrator:
    """Test weighted Gaussian integration"""

    def test_orthonormality_laguerre(self):
        """∫ x^α e^{-x} p̃_k² = 1"""
        integrand = WeightedIntegrand(PolyFamily.LAGUERRE, (2.5,), (2.5,), degree=6)
        result = integrate(integrand)
        assert result.converged
        assert result.value == pytest.approx(1.0, rel=1e-12)

    def test_orthonormality_jacobi(self):
        """∫ (1-y)^a (1+y)^b p̃_k² = 1"""
        integrand = WeightedIntegrand(PolyFamily.JACOBI, (0.5, 1.5), (0.5, 1.5), degree=9)
        assert integrate(integrand).value == pytest.approx(1.0, rel=1e-12)

    def test_large_parameters_in_log_form(self):
        """Huge masses are carried as logarithms"""
        integrand = WeightedIntegrand(
            PolyFamily.LAGUERRE, (800.0,), (800.0,), degree=0, log_const=-gammaln(801.0)
        )
        result = integrate(integrand)
        assert result.log_magnitude == pytest.approx(-gammaln(801.0), abs=1e-9)

    def test_non_polynomial_power(self):
        """|p̃|³ is integrated piecewise between the zeros"""
        alpha, k = 1.0, 3
        integrand = WeightedIntegrand(PolyFamily.LAGUERRE, (alpha,), (alpha,), degree=k, power=1.5)
        result = integrate(integrand)

        def reference(x):
            return x**alpha * math.exp(-x) * abs(orthonormal_laguerre(k, alpha, x).to_float()) ** 3

        expected, _ = scipy_integrate.quad(
            reference, 0, math.inf, limit=400, epsabs=0.0, epsrel=1e-12
        )
        assert result.converged
        assert result.value == pytest.approx(expected, rel=1e-9)

    def test_logarithmic_factor(self):
        """∫ x^α e^{-x} ln x dx = Γ(α+1) ψ(α+1)"""
        alpha = 1.5
        integrand = WeightedIntegrand(PolyFamily.LAGUERRE, (alpha,), (alpha,), degree=0, power=0.0)
        result = integrate(integrand, lambda nodes: nodes.log_first)
        expected = math.exp(gammaln(alpha + 1.0)) * digamma(alpha + 1.0)
        assert result.value == pytest.approx(expected, rel=1e-8)

    def test_rate_rescaling(self):
        """Exponential rates other than one are mapped onto the rule"""
        integrand = WeightedIntegrand(
            PolyFamily.LAGUERRE, (2.0,), (2.0,), degree=0, power=0.0, rate=3.0
        )
        # ∫ x² e^{-3x} dx = 2/27
        assert integrate(integrand).value == pytest.approx(2.0 / 27.0, rel=1e-12)

    def test_divergent_endpoint(self):
        """Endpoint exponents at or below -1 diverge"""
        integrand = WeightedIntegrand(PolyFamily.JACOBI, (-1.0, 0.0), (0.0, 0.0), degree=0)
        with pytest.raises(DivergentIntegralError):
            integrate(integrand)

    def test_non_positive_rate_diverges(self):
        """A Laguerre integrand needs a decaying exponential"""
        integrand = WeightedIntegrand(PolyFamily.LAGUERRE, (0.0,), (0.0,), degree=0, rate=0.0)
        with pytest.raises(DivergentIntegralError):
            integrate(integrand)

    def test_stalled_ladder(self):
        """A ladder that runs out is flagged, or raises when strict"""
        integrand = WeightedIntegrand(PolyFamily.JACOBI, (0.0, 0.0), (0.0, 0.0), degree=0)

        def oscillating(nodes):
            return np.cos(40.0 * nodes.u)

        result = integrate(integrand, oscillating, min_nodes=2, max_nodes=4, rtol=1e-14)
        assert not result.converged
        with pytest.raises(NonConvergenceError):
            integrate(integrand, oscillating, min_nodes=2, max_nodes=4, rtol=1e-14, strict=True)

    def test_abs_error_is_finite(self):
        """The error estimate follows the last relative change"""
        integrand = WeightedIntegrand(PolyFamily.LAGUERRE, (0.0,), (0.0,), degree=2, power=1.5)
        result = integrate(integrand)
        assert math.isfinite(result.abs_error)
        assert result.abs_error <= 1e-8 * abs(result.value)


class TestFunctionals:
    """Test moment, entropic-moment and Shannon functionals"""

    def test_probability_mass(self, hydrogen_excited):
        """A zero shift integrates the probability to one"""
        density = radial_density(hydrogen_excited, "momentum")
        assert moment_integral(density, (0.0, 0.0)).value == pytest.approx(1.0, rel=1e-11)

    def test_entropic_moment_of_ground_oscillator(self, oscillator_ground):
        """∫ f^q of the radial factor in closed form"""
        density = radial_density(oscillator_ground, "position")
        q = 2.0
        # f(u) = e^{-u}/Γ(3/2) · 2 against P(u) = u^{1/2} e^{-u}/Γ(3/2)
        result = log_entropic_moment(density, q)
        expected = (
            math.log(2.0)
            - 2.0 * gammaln(1.5)
            + gammaln(1.5)
            - 1.5 * math.log(2.0)
        )
        assert result.log_magnitude == pytest.approx(expected, rel=1e-11)

    def test_entropic_integrand_divergence(self, hydrogen_ground):
        """Small orders diverge for the slowly decaying momentum density"""
        density = radial_density(hydrogen_ground, "momentum")
        with pytest.raises(DivergentIntegralError):
            entropic_integrand(density, 0.2)
        with pytest.raises(DivergentIntegralError):
            entropic_integrand(density, 0.0)

    def test_shannon_of_radial_factor(self, hydrogen_ground):
        """-∫ P ln f for R(r) = 4 e^{-2r}: S = 3 - ln 4 against r² dr"""
        density = radial_density(hydrogen_ground, "position")
        result = shannon_integral(density)
        assert result.value == pytest.approx(3.0 - math.log(4.0), rel=1e-11)
