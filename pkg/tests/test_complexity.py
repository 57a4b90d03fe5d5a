"""
Tests for Crámer-Rao, Fisher-Shannon and LMC-Rényi complexities
"""

import math

import pytest

from src.core.complexity.measures import (
    ComplexityKind,
    cramer_rao,
    fisher_shannon,
    lmc,
    lmc_direct,
    lmc_renyi,
    space_symmetry,
)
from src.core.states.models import QuantumState, Space, SystemKind
from src.exceptions import DomainError


class TestClosedValues:
    """Test complexities with known values"""

    def test_hydrogen_ground_cramer_rao(self, hydrogen_ground):
        """C_CR = F·⟨r²⟩ = 12 in both spaces for hydrogen 1s"""
        value = cramer_rao(hydrogen_ground, "position")
        assert value.value == pytest.approx(12.0)
        assert value.lower_bound == 9.0
        assert value.margin == pytest.approx(3.0)
        assert cramer_rao(hydrogen_ground, "momentum").value == pytest.approx(12.0)

    def test_hydrogen_ground_fisher_shannon(self, hydrogen_ground):
        """C_FS = 2e π^{-1/3} for hydrogen 1s"""
        value = fisher_shannon(hydrogen_ground, "position")
        assert value.value == pytest.approx(2.0 * math.e * math.pi ** (-1.0 / 3.0), rel=1e-10)
        assert value.ratio > 1.0

    @pytest.mark.parametrize("dimension,lam", [(2, 1.0), (3, 0.4), (12, 3.0)])
    def test_oscillator_ground_saturates(self, dimension, lam):
        """Gaussians reach the Crámer-Rao and Fisher-Shannon bounds"""
        state = QuantumState.from_m(SystemKind.OSCILLATOR, dimension, 0, 0, strength=lam)
        for space in Space:
            assert cramer_rao(state, space).value == pytest.approx(dimension**2)
            assert fisher_shannon(state, space).value == pytest.approx(dimension, rel=1e-10)

    @pytest.mark.parametrize("dimension", [3, 10, 40])
    def test_oscillator_lmc(self, dimension):
        """C_LMC = √(e/2) for every oscillator ground state"""
        state = QuantumState.from_m(SystemKind.OSCILLATOR, dimension, 0, 0, strength=2.5)
        value = lmc(state, "position")
        assert value.kind is ComplexityKind.LMC
        assert value.value == pytest.approx(math.sqrt(math.e / 2.0), rel=1e-10)


class TestLmcRenyi:
    """Test the LMC-Rényi family"""

    def test_orders_must_increase(self, hydrogen_ground):
        """0 < α < β is required"""
        with pytest.raises(DomainError):
            lmc_renyi(hydrogen_ground, "position", 2.0, 2.0)
        with pytest.raises(DomainError):
            lmc_renyi(hydrogen_ground, "position", 0.0, 1.0)

    def test_direct_matches_shannon_route(self, hydrogen_excited):
        """(𝒟 e^S)^{1/D} agrees with exp((S - R₂)/D)"""
        for space in Space:
            assert lmc_direct(hydrogen_excited, space) == pytest.approx(
                lmc(hydrogen_excited, space).value, rel=1e-10
            )

    def test_general_orders(self, hydrogen_ground):
        """C̄_{α,β} for hydrogen 1s from the closed Rényi entropies"""
        alpha, beta = 0.5, 3.0
        # R_q = ln π + 3 ln q/(q-1)
        low = math.log(math.pi) + 3.0 * math.log(alpha) / (alpha - 1.0)
        high = math.log(math.pi) + 3.0 * math.log(beta) / (beta - 1.0)
        value = lmc_renyi(hydrogen_ground, "position", alpha, beta)
        assert value.kind is ComplexityKind.LMC_RENYI
        assert value.parameters == {"alpha": alpha, "beta": beta}
        assert value.value == pytest.approx(math.exp((low - high) / 3.0), rel=1e-10)

    @pytest.mark.parametrize(
        "system,dimension,n,l,m",
        [("hydrogenic", 3, 3, 1, 0), ("hydrogenic", 6, 2, 1, 1), ("oscillator", 4, 2, 3, 1)],
    )
    def test_lower_bounds(self, system, dimension, n, l, m):
        """Every complexity stays above its universal bound"""
        state = QuantumState.from_m(system, dimension, n, l, m)
        for space in Space:
            for value in (
                cramer_rao(state, space),
                fisher_shannon(state, space),
                lmc_renyi(state, space, 0.7, 2.5),
            ):
                assert value.value >= value.lower_bound * (1.0 - 1e-10)


class TestInvariance:
    """Test scaling invariance and space symmetry"""

    def test_strength_invariance(self):
        """Complexities do not depend on Z or λ"""
        for system, n, l in (("hydrogenic", 3, 1), ("oscillator", 1, 2)):
            base = QuantumState.from_m(system, 4, n, l, 1)
            scaled = base.with_strength(2.7)
            for space in Space:
                assert cramer_rao(scaled, space).value == pytest.approx(
                    cramer_rao(base, space).value, rel=1e-10
                )
                assert fisher_shannon(scaled, space).value == pytest.approx(
                    fisher_shannon(base, space).value, rel=1e-9
                )
                assert lmc(scaled, space).value == pytest.approx(lmc(base, space).value, rel=1e-9)

    def test_oscillator_space_symmetry(self, oscillator_excited):
        """Oscillator position and momentum complexities coincide"""
        assert space_symmetry(oscillator_excited, "cramer_rao") == pytest.approx(1.0)
        assert space_symmetry(oscillator_excited, ComplexityKind.FISHER_SHANNON) == pytest.approx(
            1.0, rel=1e-10
        )

    def test_space_symmetry_kinds(self, hydrogen_ground):
        """Only the Crámer-Rao and Fisher-Shannon kinds are supported"""
        with pytest.raises(DomainError):
            space_symmetry(hydrogen_ground, "lmc")
