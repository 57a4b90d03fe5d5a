"""
Tests for pseudoclassical predictions and convergence scans
"""

import math

import pytest

from src.core.asymptotics.convergence import (
    ScanPoint,
    ScanResult,
    convergence_scan,
    fit_rate,
    residual,
)
from src.core.asymptotics.predictions import (
    CATALOGUE,
    PredictionParams,
    ResidualKind,
    build_prediction,
    catalogue_entry,
    lmc_renyi_limit,
    log_q_tilde_power,
    predict,
)
from src.core.infomeasures.fisher import fisher_closed
from src.core.measures.registry import MeasureParams
from src.core.moments.models import MeasureValue, Method
from src.core.states.models import QuantumState, Space, SystemKind
from src.exceptions import DomainError, NonConvergenceError, UnknownMeasureError

LOG_PI = math.log(math.pi)


class TestPredictions:
    """Test leading-order predictions"""

    def test_fisher_product(self):
        """F[ρ]F[γ] → 4D²"""
        assert predict("fisher_product", "hydrogenic", None, None, 10) == pytest.approx(400.0)

    def test_heisenberg(self):
        """⟨r^α⟩⟨p^α⟩ → (D/2)^α"""
        params = PredictionParams(alpha=3.0)
        assert predict("heisenberg", "oscillator", None, params, 10) == pytest.approx(125.0)

    def test_shannon_sum(self):
        """S[ρ] + S[γ] → D ln(eπ)"""
        assert predict("shannon_sum", "hydrogenic", None, None, 50) == pytest.approx(
            50.0 * (1.0 + LOG_PI)
        )

    def test_hydrogen_second_order_renyi(self):
        """R₂[ρ] → (3/2) D ln D + (D/2) ln(π/(2e)) for the hydrogen ground state"""
        D = 100
        expected = 1.5 * D * math.log(D) + 0.5 * D * math.log(math.pi / (2.0 * math.e))
        params = PredictionParams(n=1, l=0, q=2.0)
        assert predict("renyi", "hydrogenic", "position", params, D) == pytest.approx(expected)

    def test_oscillator_shannon(self):
        """S[ρ] → (D/2)(1 + ln(π/λ))"""
        params = PredictionParams(strength=2.0)
        prediction = build_prediction("shannon", SystemKind.OSCILLATOR, Space.POSITION, params)
        assert prediction.residual is ResidualKind.ADDITIVE
        assert prediction.evaluate(30) == pytest.approx(15.0 * (1.0 + math.log(math.pi / 2.0)))

    def test_renyi_log_term_follows_radial_degree(self):
        """R_q carries q k/(1-q) ln D with k the radial degree"""
        params = PredictionParams(n=3, l=1, q=3.0)
        prediction = build_prediction("renyi", "hydrogenic", "momentum", params)
        assert prediction.log_d == pytest.approx(3.0 * 1 / (1.0 - 3.0))

    @pytest.mark.parametrize(
        "system,space,expected",
        [
            ("hydrogenic", "position", math.e / 2.0),
            ("hydrogenic", "momentum", 3.0**1.5 / 4.0),
            ("oscillator", "position", math.sqrt(math.e / 2.0)),
            ("oscillator", "momentum", math.sqrt(math.e / 2.0)),
        ],
    )
    def test_lmc_limits(self, system, space, expected):
        """High-D constants of the LMC complexity"""
        assert lmc_renyi_limit(SystemKind(system), Space(space), 1.0, 2.0) == pytest.approx(expected)
        assert predict("lmc", system, space, None, 500) == pytest.approx(expected)

    def test_lmc_renyi_orders(self):
        """The limit needs 0 < α < β"""
        with pytest.raises(DomainError):
            lmc_renyi_limit(SystemKind.OSCILLATOR, Space.POSITION, 2.0, 1.0)

    def test_q_tilde_power(self):
        """ln q̃^{1/(q-1)} tends to zero at q = 1 and needs q > 1/2"""
        assert log_q_tilde_power(1.0) == pytest.approx(0.0, abs=1e-8)
        assert log_q_tilde_power(2.0) == pytest.approx(1.5 * math.log(3.0) - 2.0 * math.log(2.0))
        with pytest.raises(DomainError):
            log_q_tilde_power(0.5)

    def test_second_order_heisenberg(self):
        """The 1/D correction of the hydrogen ground state reproduces D(D+1)/4"""
        params = PredictionParams(n=1, l=0)
        for D in (5, 40):
            assert predict("heisenberg_second_order", "hydrogenic", None, params, D) == pytest.approx(
                D * (D + 1) / 4.0
            )

    def test_unknown_measure(self):
        """Unknown ids raise the unknown-measure error"""
        with pytest.raises(UnknownMeasureError) as info:
            catalogue_entry("entropy_power")
        assert info.value.describe().startswith("unknown-measure: ")

    def test_space_handling(self):
        """Per-space measures need a space; combined ones drop it"""
        with pytest.raises(DomainError):
            build_prediction("fisher", "hydrogenic", None)
        assert build_prediction("fisher_product", "hydrogenic", "position").space is None

    def test_dimension_floor(self):
        """Predictions need D ≥ 2"""
        with pytest.raises(DomainError):
            predict("fisher_product", "oscillator", None, None, 1)

    def test_catalogue_is_complete(self):
        """Every catalogued prediction builds for both systems"""
        for measure_id, entry in CATALOGUE.items():
            space = "position" if entry.per_space else None
            params = PredictionParams(n=2, l=1, alpha=1.0 if measure_id == "lmc_renyi" else 2.0)
            for system in SystemKind:
                assert math.isfinite(predict(measure_id, system, space, params, 40))


class TestResiduals:
    """Test residual conventions and rate fits"""

    def test_residual_kinds(self):
        """Relative residuals divide, additive residuals subtract per D"""
        assert residual(ResidualKind.RELATIVE, 110.0, 100.0, 10) == pytest.approx(0.1)
        assert residual(ResidualKind.ADDITIVE, 110.0, 100.0, 10) == pytest.approx(1.0)

    def test_fit_rate_recovers_power_law(self):
        """log|r| against log D recovers slope and prefactor"""
        dims = [10, 20, 40, 80, 160]
        rate, prefactor = fit_rate(dims, [-3.0 / d for d in dims])
        assert rate == pytest.approx(-1.0)
        assert prefactor == pytest.approx(3.0)

    def test_fit_rate_drops_exact_points(self):
        """Residuals at the floor carry no slope"""
        assert fit_rate([10, 20, 40, 80], [0.0, 1e-15, 0.0, 0.2]) == (None, None)

    def test_rate_window_shift(self):
        """Claims faster than 1/D shift the accepted window"""
        result = ScanResult(
            measure_id="heisenberg_second_order",
            system="hydrogenic",
            space=None,
            residual_kind=ResidualKind.RELATIVE,
            claimed_order="relative O(1/D²)",
            claimed_rate=-2.0,
            points=(ScanPoint(100, 1.0, 1.0, 1e-4),),
            fitted_rate=-2.1,
            fitted_prefactor=1.0,
            exact_match=False,
            log_growth=None,
        )
        assert result.rate_window == pytest.approx((-2.6, -1.6))
        assert result.rate_within_window
        assert result.within_envelope
        assert result.passed


class TestConvergenceScan:
    """Test convergence scans against closed-form exact values"""

    def test_exact_second_order(self, hydrogen_ground):
        """The second-order Heisenberg model is exact for hydrogen 1s"""
        result = convergence_scan("heisenberg_second_order", hydrogen_ground, [20, 50, 100, 200])
        assert result.exact_match
        assert result.fitted_rate is None
        assert result.passed
        assert [p.dimension for p in result.points] == [20, 50, 100, 200]

    def test_fisher_product_rate(self):
        """F[ρ]F[γ]/(4D²) - 1 decays as 1/D for an excited oscillator"""
        template = QuantumState.from_m(SystemKind.OSCILLATOR, 3, 1, 1)
        result = convergence_scan("fisher_product", template)
        assert result.space is None
        assert result.residual_kind is ResidualKind.RELATIVE
        assert not result.exact_match
        assert result.fitted_rate == pytest.approx(-1.0, abs=0.1)
        assert result.passed
        # 16(D/2+3)² / 4D² - 1
        last = result.points[-1]
        assert last.residual == pytest.approx((1.0 + 6.0 / last.dimension) ** 2 - 1.0, rel=1e-10)

    def test_variance_rate(self, hydrogen_ground):
        """⟨r²⟩ of hydrogen 1s approaches D⁴/16 with a 1/D residual"""
        result = convergence_scan("variance", hydrogen_ground, [20, 50, 100, 200, 500], space="position")
        assert result.fitted_rate == pytest.approx(-1.0, abs=0.1)
        assert result.passed

    def test_quadrature_exactness(self, hydrogen_excited):
        """exactness='quadrature' evaluates Fisher informations through moments"""
        dims = [10, 20, 40, 80]
        result = convergence_scan(
            "fisher", hydrogen_excited, dims, space="position", exactness="quadrature"
        )
        for point in result.points:
            state = hydrogen_excited.with_dimension(point.dimension)
            assert point.exact == pytest.approx(fisher_closed(state, "position"), rel=1e-9)

    @pytest.mark.parametrize(
        "dims",
        [[20, 50, 100], [20, 50, 50, 100], [1, 20, 50, 100], [20, 100, 50, 200]],
    )
    def test_dimension_checks(self, hydrogen_ground, dims):
        """At least four ascending integers ≥ 2"""
        with pytest.raises(DomainError):
            convergence_scan("fisher_product", hydrogen_ground, dims)

    def test_unknown_exactness(self, hydrogen_ground):
        """exactness is closed or quadrature"""
        with pytest.raises(DomainError):
            convergence_scan("fisher_product", hydrogen_ground, [2, 3, 4, 5], exactness="exact")

    def test_stalled_values_raise(self, hydrogen_ground, mocker):
        """Unconverged exact values abort the scan"""
        mocker.patch(
            "src.core.asymptotics.convergence.evaluate_measure",
            return_value=MeasureValue(1.0, Method.QUADRATURE, converged=False),
        )
        with pytest.raises(NonConvergenceError):
            convergence_scan("shannon", hydrogen_ground, [2, 3, 4, 5], space="position")

    def test_log_growth_for_entropies(self, mocker, oscillator_ground):
        """Additive scans report the largest |exact - predicted|/ln D"""
        params = MeasureParams()
        mocker.patch(
            "src.core.asymptotics.convergence.evaluate_measure",
            side_effect=lambda _id, state, _space, _params: MeasureValue.closed(
                0.5 * state.dimension * (1.0 + LOG_PI) + 2.0 * math.log(state.dimension)
            ),
        )
        result = convergence_scan(
            "shannon", oscillator_ground, [10, 20, 40, 80], space="position", params=params
        )
        assert result.residual_kind is ResidualKind.ADDITIVE
        assert result.log_growth == pytest.approx(2.0)

    @pytest.mark.slow
    def test_hydrogen_shannon_default_dimensions(self, hydrogen_ground):
        """S[ρ] of hydrogen 1s over the default dimensions grows at most like ln D"""
        result = convergence_scan("shannon", hydrogen_ground, space="position")
        assert result.log_growth is not None
        assert all(p.converged for p in result.points)
