"""
Tests for the measure registry
"""

import math

import pytest

from src.core.complexity.measures import lmc
from src.core.infomeasures.entropies import renyi
from src.core.measures.registry import (
    MEASURES,
    MeasureParams,
    evaluate_measure,
    get_measure,
)
from src.core.moments.models import Method
from src.core.states.models import Space
from src.exceptions import UnknownMeasureError


class TestCatalogue:
    """Test registry lookups and parameter defaults"""

    def test_registered_ids(self):
        """Per-space and combined measures are all registered"""
        assert len(MEASURES) == 19
        combined = {m for m, spec in MEASURES.items() if not spec.per_space}
        assert combined == {"heisenberg", "heisenberg2", "fisher_product", "shannon_sum", "renyi_sum"}

    def test_unknown_id(self):
        """Unknown ids point at list-measures"""
        with pytest.raises(UnknownMeasureError) as info:
            get_measure("kullback")
        assert "list-measures" in str(info.value)
        assert info.value.exit_code == 2

    def test_defaults_fill_only_unset_orders(self):
        """Explicit orders win over measure defaults"""
        resolved = get_measure("lmc_renyi").resolve(MeasureParams(beta=3.0))
        assert resolved.alpha == 1.0
        assert resolved.beta == 3.0
        assert resolved.as_dict() == {"alpha": 1.0, "beta": 3.0}


class TestEvaluation:
    """Test evaluation through the registry"""

    def test_heisenberg2(self, hydrogen_ground):
        """heisenberg2 is ⟨r²⟩⟨p²⟩ in closed form"""
        value = evaluate_measure("heisenberg2", hydrogen_ground, None)
        assert value.method is Method.CLOSED_FORM
        assert value.value == pytest.approx(3.0)

    def test_combined_measures_ignore_space(self, oscillator_ground):
        """F[ρ]F[γ] = (2D)² for the oscillator ground state"""
        for space in (None, "position", "momentum"):
            assert evaluate_measure("fisher_product", oscillator_ground, space).value == pytest.approx(36.0)

    def test_shannon_sum(self, oscillator_ground):
        """S[ρ] + S[γ] = D(1 + ln π) for any λ"""
        state = oscillator_ground.with_strength(1.8)
        value = evaluate_measure("shannon_sum", state, None)
        assert value.value == pytest.approx(3.0 * (1.0 + math.log(math.pi)), rel=1e-9)

    def test_renyi_sum_uses_conjugate_order(self, hydrogen_ground):
        """R_p[ρ] + R_q[γ] with 1/p + 1/q = 2"""
        value = evaluate_measure("renyi_sum", hydrogen_ground, None, MeasureParams(p=2.0))
        expected = (
            renyi(hydrogen_ground, Space.POSITION, 2.0).as_measure().value
            + renyi(hydrogen_ground, Space.MOMENTUM, 2.0 / 3.0).as_measure().value
        )
        assert value.value == pytest.approx(expected, rel=1e-12)

    def test_moment_without_closed_form(self, hydrogen_ground):
        """moment falls back to quadrature"""
        value = evaluate_measure("moment", hydrogen_ground, "position", MeasureParams(alpha=3.0))
        assert value.method is Method.QUADRATURE
        assert value.value == pytest.approx(7.5, rel=1e-11)

    def test_lmc_default_orders(self, hydrogen_excited):
        """lmc_renyi with its default orders is the LMC complexity"""
        value = evaluate_measure("lmc_renyi", hydrogen_excited, "momentum")
        assert value.value == pytest.approx(lmc(hydrogen_excited, "momentum").value, rel=1e-12)

    def test_fisher_routes_agree(self, hydrogen_excited):
        """Closed and moment-based Fisher informations coincide"""
        closed = evaluate_measure("fisher", hydrogen_excited, "position")
        via_moments = evaluate_measure("fisher_moments", hydrogen_excited, "position")
        assert via_moments.value == pytest.approx(closed.value, rel=1e-9)
