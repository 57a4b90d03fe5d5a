"""
Tests for quantum state labels, radial densities and hyperspherical harmonics
"""

import math

import numpy as np
import pytest
from scipy import integrate

from src.core.states.angular import (
    angular_factor,
    cartesian_to_hyperspherical,
    full_density_at,
    log_harmonic_squared,
)
from src.core.states.densities import radial_density, radial_density_at
from src.core.states.models import QuantumState, Space, SystemKind, validate
from src.exceptions import DomainError, InvalidStateError


class TestQuantumState:
    """Test state construction and validation"""

    def test_empty_mu_means_zero_chain(self):
        """An omitted μ chain is all zeros"""
        state = QuantumState(SystemKind.HYDROGENIC, 5, 3, 2)
        assert state.mu == (0, 0, 0)
        assert state.m == 0

    def test_from_m_fills_chain(self):
        """from_m repeats |m| over the whole chain"""
        state = QuantumState.from_m("oscillator", 4, 1, 3, m=-2)
        assert state.mu == (2, 2)
        assert state.m == 2

    @pytest.mark.parametrize(
        "kwargs,message",
        [
            ({"system": "hydrogenic", "dimension": 3, "n": 1, "l": 1}, "l ≤ n−1"),
            ({"system": "hydrogenic", "dimension": 3, "n": 0, "l": 0}, "n ≥ 1"),
            ({"system": "oscillator", "dimension": 3, "n": -1, "l": 0}, "n ≥ 0"),
            ({"system": "oscillator", "dimension": 1, "n": 0, "l": 0}, "D ≥ 2"),
            ({"system": "oscillator", "dimension": 3, "n": 0, "l": 0, "strength": 0.0}, "lambda > 0"),
            ({"system": "hydrogenic", "dimension": 4, "n": 3, "l": 1, "mu": (2, 0)}, "ordering"),
            ({"system": "hydrogenic", "dimension": 4, "n": 3, "l": 1, "mu": (1,)}, "D−2"),
        ],
    )
    def test_invalid_states(self, kwargs, message):
        """Every constraint violation names the constraint"""
        with pytest.raises(InvalidStateError, match=message):
            QuantumState(**kwargs)

    def test_two_dimensions_needs_m_equal_l(self):
        """In two dimensions |m| = l"""
        with pytest.raises(InvalidStateError):
            QuantumState.from_m(SystemKind.HYDROGENIC, 2, 2, 1, m=0)
        state = QuantumState.from_m(SystemKind.HYDROGENIC, 2, 2, 1, m=1)
        assert state.mu == ()
        assert state.m == 1

    def test_invalid_state_exit_code(self):
        """Invalid states map to exit code 2"""
        with pytest.raises(InvalidStateError) as info:
            QuantumState.from_m(SystemKind.HYDROGENIC, 3, 1, 1)
        assert info.value.exit_code == 2
        assert info.value.describe().startswith("invalid-state: ")

    def test_grand_quantum_number(self, hydrogen_excited, oscillator_excited):
        """η = n+(D-3)/2 for hydrogenic, 2n+l+(D-3)/2 for oscillator states"""
        assert hydrogen_excited.eta == pytest.approx(3.5)
        assert hydrogen_excited.big_l == pytest.approx(1.5)
        assert oscillator_excited.eta == pytest.approx(5.0)
        assert hydrogen_excited.radial_degree == 1
        assert oscillator_excited.radial_degree == 1

    def test_energy(self, hydrogen_ground, oscillator_ground):
        """Bound-state energies"""
        assert hydrogen_ground.energy() == pytest.approx(-0.5)
        assert oscillator_ground.energy() == pytest.approx(1.5)

    def test_with_dimension_keeps_m(self):
        """Changing D keeps |m| at the end of the chain"""
        state = QuantumState(SystemKind.HYDROGENIC, 5, 4, 2, mu=(2, 1, 1))
        assert state.with_dimension(3).mu == (1,)
        assert state.with_dimension(7).mu == (2, 1, 1, 1, 1)
        assert state.with_dimension(2).mu == ()

    def test_validate_and_label(self, oscillator_excited):
        """validate() passes a good state through; label() names it"""
        assert validate(oscillator_excited) is oscillator_excited
        assert oscillator_excited.label() == "oscillator(D=5, n=1, l=2, mu=(1,1,1), lambda=0.7)"

    def test_space_dual(self):
        """Position and momentum are dual to each other"""
        assert Space.POSITION.dual is Space.MOMENTUM
        assert Space("momentum").dual is Space.POSITION


def _radial_norm(state: QuantumState, space: Space) -> float:
    D = state.dimension

    def integrand(r):
        return radial_density_at(state, space, r) * r ** (D - 1)

    value, _ = integrate.quad(integrand, 0, math.inf, limit=400, epsabs=0.0, epsrel=1e-12)
    return value


class TestRadialDensities:
    """Test radial densities against closed forms and normalization"""

    def test_hydrogen_ground_position(self, hydrogen_ground):
        """R(r) = 4 e^{-2r} for hydrogen 1s"""
        for r in (0.1, 0.5, 2.0):
            assert radial_density_at(hydrogen_ground, "position", r) == pytest.approx(
                4.0 * math.exp(-2.0 * r), rel=1e-12
            )

    def test_hydrogen_ground_momentum(self, hydrogen_ground):
        """R(p) = 32/(π(1+p²)⁴) for hydrogen 1s"""
        for p in (0.0, 0.3, 1.0, 4.0):
            assert radial_density_at(hydrogen_ground, "momentum", p) == pytest.approx(
                32.0 / (math.pi * (1.0 + p * p) ** 4), rel=1e-12
            )

    def test_oscillator_ground(self, oscillator_ground):
        """R(r) = 4 π^{-1/2} e^{-r²} in both spaces"""
        for space in Space:
            assert radial_density_at(oscillator_ground, space, 0.8) == pytest.approx(
                4.0 / math.sqrt(math.pi) * math.exp(-0.64), rel=1e-12
            )

    def test_oscillator_strength_scaling(self):
        """Position densities contract and momentum densities spread with λ"""
        state = QuantumState.from_m(SystemKind.OSCILLATOR, 3, 0, 0, strength=4.0)
        # ρ(r) = (λ/π)^{3/2} e^{-λr²}, γ(p) = (πλ)^{-3/2} e^{-p²/λ}
        assert radial_density_at(state, "position", 0.5) == pytest.approx(
            4.0 * math.pi * (4.0 / math.pi) ** 1.5 * math.exp(-1.0), rel=1e-12
        )
        assert radial_density_at(state, "momentum", 2.0) == pytest.approx(
            4.0 * math.pi * (4.0 * math.pi) ** -1.5 * math.exp(-1.0), rel=1e-12
        )

    @pytest.mark.parametrize(
        "system,dimension,n,l,strength",
        [
            ("hydrogenic", 3, 3, 1, 1.0),
            ("hydrogenic", 4, 2, 0, 2.0),
            ("hydrogenic", 6, 4, 2, 0.5),
            ("oscillator", 2, 2, 1, 1.0),
            ("oscillator", 5, 1, 3, 0.7),
        ],
    )
    def test_normalization(self, system, dimension, n, l, strength):
        """∫ R r^{D-1} dr = 1 in both spaces"""
        state = QuantumState.from_m(system, dimension, n, l, m=l if dimension == 2 else 0, strength=strength)
        for space in Space:
            assert _radial_norm(state, space) == pytest.approx(1.0, rel=1e-8)

    def test_negative_radius_rejected(self, hydrogen_ground):
        """Radial arguments must be non-negative"""
        with pytest.raises(DomainError):
            radial_density_at(hydrogen_ground, "position", -1.0)

    def test_weight_variable_families(self, hydrogen_excited, oscillator_excited):
        """Hydrogenic momentum densities live on the Gegenbauer variable"""
        assert radial_density(hydrogen_excited, "position").family.value == "laguerre"
        assert radial_density(hydrogen_excited, "momentum").family.value == "jacobi"
        assert radial_density(oscillator_excited, "momentum").tau == 2

    def test_moment_shift(self, hydrogen_ground, oscillator_ground):
        """Moment orders become exponent shifts in the weight variable"""
        assert radial_density(hydrogen_ground, "position").moment_shift(2.0) == (2.0,)
        assert radial_density(oscillator_ground, "position").moment_shift(2.0) == (1.0,)
        assert radial_density(hydrogen_ground, "momentum").moment_shift(2.0) == (1.0, -1.0)


class TestHyperspherical:
    """Test hyperspherical harmonics and full densities"""

    def test_uniform_for_l_zero(self, hydrogen_ground):
        """l = 0 gives |𝒴|² = 1/Ω_{D-1}"""
        assert angular_factor(hydrogen_ground).is_uniform
        value = math.exp(log_harmonic_squared(hydrogen_ground, [0.7, 1.9]))
        assert value == pytest.approx(1.0 / (4.0 * math.pi), rel=1e-13)

    def test_p_state_in_three_dimensions(self):
        """|Y_{1,0}|² = 3cos²θ/(4π)"""
        state = QuantumState.from_m(SystemKind.HYDROGENIC, 3, 2, 1, m=0)
        theta = 0.4
        value = math.exp(log_harmonic_squared(state, [theta, 0.3]))
        assert value == pytest.approx(3.0 * math.cos(theta) ** 2 / (4.0 * math.pi), rel=1e-12)

    def test_angle_count_checked(self, hydrogen_ground):
        """D-1 angles are required"""
        with pytest.raises(DomainError):
            log_harmonic_squared(hydrogen_ground, [0.1, 0.2, 0.3])

    def test_factor_structure(self, oscillator_excited):
        """One Gegenbauer factor per polar angle"""
        factors = angular_factor(oscillator_excited).factors
        assert len(factors) == 3
        assert [f.degree for f in factors] == [1, 0, 0]
        assert [f.sine_power for f in factors] == [1, 1, 1]

    def test_full_density_at_cartesian_point(self, hydrogen_ground):
        """|Ψ|² = e^{-2r}/π for hydrogen 1s"""
        r, angles = cartesian_to_hyperspherical([0.3, -0.4, 1.2])
        assert r == pytest.approx(1.3)
        assert full_density_at(hydrogen_ground, "position", r, angles) == pytest.approx(
            math.exp(-2.6) / math.pi, rel=1e-12
        )

    def test_angular_normalization_in_four_dimensions(self):
        """∫ |𝒴|² dΩ = 1 for a non-trivial chain"""
        state = QuantumState(SystemKind.OSCILLATOR, 4, 0, 2, mu=(1, 1))

        def integrand(t2, t1):
            # dΩ = sin²θ₁ sinθ₂ dθ₁ dθ₂ dφ with φ integrated out
            angles = [t1, t2, 0.0]
            weight = math.sin(t1) ** 2 * math.sin(t2) * 2.0 * math.pi
            return math.exp(log_harmonic_squared(state, angles)) * weight

        value, _ = integrate.dblquad(integrand, 0, math.pi, 0, math.pi, epsabs=1e-13, epsrel=1e-12)
        assert value == pytest.approx(1.0, rel=1e-8)

    def test_cartesian_needs_two_coordinates(self):
        """A point needs at least two coordinates"""
        with pytest.raises(DomainError):
            cartesian_to_hyperspherical([1.0])

    def test_cartesian_round_trip_radius(self):
        """The radius is the Euclidean norm"""
        point = np.array([1.0, 2.0, 2.0, 4.0])
        r, angles = cartesian_to_hyperspherical(point)
        assert r == pytest.approx(5.0)
        assert angles.shape == (3,)
