"""
Row evaluation for single states and for sweeps

Sweep points are independent; a bounded thread pool evaluates them and
results are collected in sweep order, so output does not depend on
scheduling.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from loguru import logger

from src.config import get_settings
from src.core.asymptotics.convergence import prediction_params, residual
from src.core.asymptotics.predictions import (
    CATALOGUE,
    PredictionParams,
    ResidualKind,
    build_prediction,
)
from src.core.measures.registry import MeasureParams, evaluate_measure, get_measure
from src.core.moments.models import MeasureValue
from src.core.output.models import OutputRow
from src.core.states.models import QuantumState, Space
from src.core.sweep.models import SweepSpec
from src.exceptions import DomainError, NotAvailableError, SpreadError

# registry id -> catalogue id of its leading-order prediction
PREDICTION_IDS = {
    "moment": "radial_moment",
    "heisenberg": "heisenberg",
    "heisenberg2": "heisenberg",
    "variance": "variance",
    "fisher": "fisher",
    "fisher_moments": "fisher",
    "fisher_direct": "fisher",
    "shannon": "shannon",
    "renyi": "renyi",
    "fisher_product": "fisher_product",
    "shannon_sum": "shannon_sum",
    "renyi_sum": "renyi_sum",
    "cramer_rao": "cramer_rao",
    "fisher_shannon": "fisher_shannon",
    "lmc": "lmc",
    "lmc_renyi": "lmc_renyi",
}

# measures whose value has an independent quadrature route
_CROSS_CHECK_IDS = {
    "moment": "moment",
    "heisenberg": "heisenberg",
    "heisenberg2": "heisenberg2",
    "fisher": "fisher_moments",
}


@dataclass
class RowFailure:
    index: int
    measure_id: str
    space: Space | None
    error: SpreadError


@dataclass
class SweepOutcome:
    rows: list[OutputRow] = field(default_factory=list)
    failures: list[RowFailure] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return max((f.error.exit_code for f in self.failures), default=0)


def residual_conventions(measure_ids: list[str]) -> dict[str, str]:
    """Residual kind per measure, for the output metadata"""
    conventions = {}
    for measure_id in measure_ids:
        catalogue_id = PREDICTION_IDS.get(measure_id)
        if catalogue_id is None:
            continue
        entry = CATALOGUE[catalogue_id]
        space = Space.POSITION if entry.per_space else None
        params = PredictionParams(alpha=1.0) if catalogue_id == "lmc_renyi" else PredictionParams()
        conventions[measure_id] = build_prediction(catalogue_id, "oscillator", space, params).residual.value
    return conventions


def _prediction(
    measure_id: str, state: QuantumState, space: Space | None, params: MeasureParams
) -> tuple[float, ResidualKind] | None:
    catalogue_id = PREDICTION_IDS.get(measure_id)
    if catalogue_id is None:
        return None
    try:
        prediction = build_prediction(
            catalogue_id, state.system, space, prediction_params(state, params)
        )
    except DomainError:
        return None
    return prediction.evaluate(state.dimension), prediction.residual


def _cross_check(
    measure_id: str, state: QuantumState, space: Space | None, params: MeasureParams, value: MeasureValue
) -> tuple[float, float] | None:
    other_id = _CROSS_CHECK_IDS.get(measure_id)
    if other_id is None:
        return None
    forced = MeasureParams(alpha=params.alpha, beta=params.beta, q=params.q, p=params.p, method="quadrature")
    try:
        other = evaluate_measure(other_id, state, space, forced)
    except NotAvailableError:
        return None
    difference = abs(other.value - value.value) / max(abs(value.value), 1e-300)
    return other.value, difference


def measure_rows(
    state: QuantumState,
    measure_id: str,
    spaces: list[Space],
    params: MeasureParams,
    *,
    predict: bool = False,
    cross_check: bool = False,
) -> list[OutputRow]:
    """Rows of one measure: one per space, or a single combined row"""
    spec = get_measure(measure_id)
    resolved = spec.resolve(params)
    targets: list[Space | None] = list(spaces) if spec.per_space else [None]
    rows = []
    for space in targets:
        value = evaluate_measure(measure_id, state, space, resolved)
        extra: dict[str, float | None] = {}
        if predict:
            predicted = _prediction(measure_id, state, space, resolved)
            if predicted is not None:
                expected, kind = predicted
                extra["predicted"] = expected
                extra["residual"] = residual(kind, value.value, expected, state.dimension)
        if cross_check:
            checked = _cross_check(measure_id, state, space, resolved, value)
            if checked is not None:
                extra["cross_check"], extra["cross_check_difference"] = checked
        orders = {
            name: value
            for name, value in resolved.as_dict().items()
            if name in spec.parameters or name in spec.defaults
        }
        rows.append(OutputRow.build(state, measure_id, space, orders, value, **extra))
    return rows


def _point_rows(spec: SweepSpec, index: int, state: QuantumState) -> tuple[list[OutputRow], list[RowFailure]]:
    orders = spec.orders_at(index)
    params = MeasureParams(method=spec.method, **orders)
    rows: list[OutputRow] = []
    failures: list[RowFailure] = []
    for measure_id in spec.measures:
        try:
            rows.extend(
                measure_rows(state, measure_id, spec.spaces, params, predict=spec.predict)
            )
        except SpreadError as e:
            if not spec.keep_going:
                raise
            logger.warning(f"Skipping {measure_id} at sweep point {index}: {e.describe()}")
            failures.append(RowFailure(index, measure_id, None, e))
    return rows, failures


def run_sweep(spec: SweepSpec, max_workers: int | None = None) -> SweepOutcome:
    """
    Evaluate every sweep point and collect rows in sweep order

    Args:
        spec: validated sweep specification
        max_workers: pool size (settings default)

    Returns:
        SweepOutcome with the rows and, under keep_going, the skipped rows
    """
    workers = max_workers or get_settings().max_workers
    states = spec.states()
    logger.info(
        f"Sweep over {spec.variable} with {len(states)} points, "
        f"measures {spec.measures}, {workers} workers"
    )
    outcome = SweepOutcome()
    with ThreadPoolExecutor(max_workers=workers) as pool:
        for rows, failures in pool.map(
            lambda item: _point_rows(spec, *item), enumerate(states)
        ):
            outcome.rows.extend(rows)
            outcome.failures.extend(failures)
    logger.info(f"Sweep finished: {len(outcome.rows)} rows, {len(outcome.failures)} skipped")
    return outcome
