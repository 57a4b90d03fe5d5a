"""
Registry of every measure the toolkit can evaluate for a state

Each entry maps a measure id onto a function (state, space, params) →
MeasureValue. Per-space measures are evaluated once per requested space;
combined measures (products and sums over both spaces) ignore the space.
"""

from collections.abc import Callable
from dataclasses import dataclass, field, replace

from src.core.complexity.measures import (
    ComplexityValue,
    cramer_rao,
    fisher_shannon,
    lmc,
    lmc_renyi,
)
from src.core.infomeasures.entropies import (
    disequilibrium,
    entropic_moment,
    renyi,
    shannon,
    tsallis,
)
from src.core.infomeasures.fisher import fisher_closed, fisher_direct, fisher_via_moments
from src.core.infomeasures.uncertainty import conjugate_order
from src.core.moments.models import MeasureValue, Method
from src.core.moments.radial import heisenberg_product, radial_moment, variance
from src.core.states.models import QuantumState, Space
from src.exceptions import UnknownMeasureError


@dataclass(frozen=True)
class MeasureParams:
    """Orders and options a measure may take; None means the measure's default"""

    alpha: float | None = None
    beta: float | None = None
    q: float | None = None
    p: float | None = None
    method: str = "auto"

    def with_defaults(self, **defaults: float) -> "MeasureParams":
        updates = {k: v for k, v in defaults.items() if getattr(self, k) is None}
        return replace(self, **updates)

    def as_dict(self) -> dict[str, float]:
        return {
            k: v
            for k, v in (("alpha", self.alpha), ("beta", self.beta), ("q", self.q), ("p", self.p))
            if v is not None
        }


Compute = Callable[[QuantumState, Space | None, MeasureParams], MeasureValue]


@dataclass(frozen=True)
class MeasureSpec:
    measure_id: str
    per_space: bool
    parameters: tuple[str, ...]
    description: str
    defaults: dict[str, float] = field(default_factory=dict)
    compute: Compute = field(default=None, repr=False)  # type: ignore[assignment]

    def resolve(self, params: MeasureParams) -> MeasureParams:
        return params.with_defaults(**self.defaults)


def _from_complexity(value: ComplexityValue) -> MeasureValue:
    return MeasureValue(value=value.value, method=value.method, converged=value.converged)


def _sum_over_spaces(first: MeasureValue, second: MeasureValue) -> MeasureValue:
    return first.combine(second, first.value + second.value)


def _moment(state: QuantumState, space: Space | None, params: MeasureParams) -> MeasureValue:
    return radial_moment(state, space, params.alpha, params.method)  # type: ignore[arg-type]


def _heisenberg(state: QuantumState, space: Space | None, params: MeasureParams) -> MeasureValue:
    return heisenberg_product(state, params.alpha, params.method)  # type: ignore[arg-type]


def _variance(state: QuantumState, space: Space | None, params: MeasureParams) -> MeasureValue:
    return MeasureValue.closed(variance(state, space))  # type: ignore[arg-type]


def _fisher(state: QuantumState, space: Space | None, params: MeasureParams) -> MeasureValue:
    return MeasureValue.closed(fisher_closed(state, space))  # type: ignore[arg-type]


def _fisher_moments(state: QuantumState, space: Space | None, params: MeasureParams) -> MeasureValue:
    return fisher_via_moments(state, space)  # type: ignore[arg-type]


def _fisher_direct(state: QuantumState, space: Space | None, params: MeasureParams) -> MeasureValue:
    return fisher_direct(state, space)  # type: ignore[arg-type]


def _shannon(state: QuantumState, space: Space | None, params: MeasureParams) -> MeasureValue:
    return shannon(state, space).as_measure()  # type: ignore[arg-type]


def _renyi(state: QuantumState, space: Space | None, params: MeasureParams) -> MeasureValue:
    return renyi(state, space, params.q).as_measure()  # type: ignore[arg-type]


def _tsallis(state: QuantumState, space: Space | None, params: MeasureParams) -> MeasureValue:
    return MeasureValue(tsallis(state, space, params.q), Method.QUADRATURE)  # type: ignore[arg-type]


def _disequilibrium(state: QuantumState, space: Space | None, params: MeasureParams) -> MeasureValue:
    return MeasureValue(disequilibrium(state, space), Method.QUADRATURE)  # type: ignore[arg-type]


def _entropic_moment(state: QuantumState, space: Space | None, params: MeasureParams) -> MeasureValue:
    return entropic_moment(state, space, params.q)  # type: ignore[arg-type]


def _cramer_rao(state: QuantumState, space: Space | None, params: MeasureParams) -> MeasureValue:
    return _from_complexity(cramer_rao(state, space))  # type: ignore[arg-type]


def _fisher_shannon(state: QuantumState, space: Space | None, params: MeasureParams) -> MeasureValue:
    return _from_complexity(fisher_shannon(state, space))  # type: ignore[arg-type]


def _lmc(state: QuantumState, space: Space | None, params: MeasureParams) -> MeasureValue:
    return _from_complexity(lmc(state, space))  # type: ignore[arg-type]


def _lmc_renyi(state: QuantumState, space: Space | None, params: MeasureParams) -> MeasureValue:
    return _from_complexity(lmc_renyi(state, space, params.alpha, params.beta))  # type: ignore[arg-type]


def _fisher_product(state: QuantumState, space: Space | None, params: MeasureParams) -> MeasureValue:
    return MeasureValue.closed(
        fisher_closed(state, Space.POSITION) * fisher_closed(state, Space.MOMENTUM)
    )


def _shannon_sum(state: QuantumState, space: Space | None, params: MeasureParams) -> MeasureValue:
    return _sum_over_spaces(
        shannon(state, Space.POSITION).as_measure(),
        shannon(state, Space.MOMENTUM).as_measure(),
    )


def _renyi_sum(state: QuantumState, space: Space | None, params: MeasureParams) -> MeasureValue:
    p = params.p
    q = params.q if params.q is not None else conjugate_order(p)  # type: ignore[arg-type]
    return _sum_over_spaces(
        renyi(state, Space.POSITION, p).as_measure(),  # type: ignore[arg-type]
        renyi(state, Space.MOMENTUM, q).as_measure(),
    )


MEASURES: dict[str, MeasureSpec] = {
    spec.measure_id: spec
    for spec in (
        MeasureSpec("moment", True, ("alpha",), "radial expectation value ⟨r^α⟩ / ⟨p^α⟩", {"alpha": 2.0}, _moment),
        MeasureSpec("heisenberg", False, ("alpha",), "Heisenberg-like product ⟨r^α⟩⟨p^α⟩", {"alpha": 2.0}, _heisenberg),
        MeasureSpec("heisenberg2", False, (), "Heisenberg product ⟨r²⟩⟨p²⟩", {"alpha": 2.0}, _heisenberg),
        MeasureSpec("variance", True, (), "variance ⟨r²⟩ / ⟨p²⟩", {}, _variance),
        MeasureSpec("fisher", True, (), "Fisher information, closed form", {}, _fisher),
        MeasureSpec("fisher_moments", True, (), "Fisher information from radial moments", {}, _fisher_moments),
        MeasureSpec("fisher_direct", True, (), "Fisher information by gradient quadrature (l = 0)", {}, _fisher_direct),
        MeasureSpec("shannon", True, (), "Shannon entropy", {}, _shannon),
        MeasureSpec("renyi", True, ("q",), "Rényi entropy R_q", {"q": 2.0}, _renyi),
        MeasureSpec("tsallis", True, ("q",), "Tsallis entropy T_q", {"q": 2.0}, _tsallis),
        MeasureSpec("disequilibrium", True, (), "disequilibrium ∫ρ²", {}, _disequilibrium),
        MeasureSpec("entropic_moment", True, ("q",), "ln ∫ρ^q", {"q": 2.0}, _entropic_moment),
        MeasureSpec("cramer_rao", True, (), "Crámer-Rao complexity F·V", {}, _cramer_rao),
        MeasureSpec("fisher_shannon", True, (), "Fisher-Shannon complexity", {}, _fisher_shannon),
        MeasureSpec("lmc", True, (), "LMC complexity (α → 1, β = 2)", {}, _lmc),
        MeasureSpec("lmc_renyi", True, ("alpha", "beta"), "LMC-Rényi complexity", {"alpha": 1.0, "beta": 2.0}, _lmc_renyi),
        MeasureSpec("fisher_product", False, (), "Fisher product F[ρ]F[γ]", {}, _fisher_product),
        MeasureSpec("shannon_sum", False, (), "Shannon sum S[ρ] + S[γ]", {}, _shannon_sum),
        MeasureSpec("renyi_sum", False, ("p",), "Rényi sum R_p[ρ] + R_q[γ], q conjugate to p", {"p": 2.0}, _renyi_sum),
    )
}


def get_measure(measure_id: str) -> MeasureSpec:
    """Look up a measure by id"""
    try:
        return MEASURES[measure_id]
    except KeyError:
        raise UnknownMeasureError(
            f"unknown measure {measure_id!r}; run list-measures for the catalogue"
        ) from None


def evaluate_measure(
    measure_id: str,
    state: QuantumState,
    space: Space | str | None,
    params: MeasureParams | None = None,
) -> MeasureValue:
    """
    Evaluate one measure for a state

    Args:
        measure_id: registry id
        state: validated quantum state
        space: position or momentum for per-space measures, ignored otherwise
        params: measure orders and moment method

    Returns:
        MeasureValue
    """
    spec = get_measure(measure_id)
    resolved = spec.resolve(params or MeasureParams())
    return spec.compute(state, Space(space) if spec.per_space and space is not None else None, resolved)
