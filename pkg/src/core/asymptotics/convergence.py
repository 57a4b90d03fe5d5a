"""
Convergence of exact values towards the leading-order predictions

A scan evaluates one measure over an ascending list of dimensions, compares
every exact value with its prediction and fits the decay of the residual
against D. Relative residuals are used for products, Fisher informations,
variances and complexities, additive-per-D residuals for entropies.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from loguru import logger

from src.config import get_settings
from src.core.asymptotics.predictions import (
    AsymptoticPrediction,
    PredictionParams,
    ResidualKind,
    build_prediction,
    catalogue_entry,
)
from src.core.measures.registry import MeasureParams, evaluate_measure, get_measure
from src.core.moments.models import MeasureValue
from src.core.states.models import QuantumState, Space
from src.exceptions import DomainError, NonConvergenceError

EXACTNESS = ("closed", "quadrature")

# catalogue id -> registry id used for the exact values
_EXACT_MEASURE = {
    "heisenberg_second_order": "heisenberg",
    "radial_moment": "moment",
}


@dataclass(frozen=True)
class ScanPoint:
    dimension: int
    exact: float
    predicted: float
    residual: float
    converged: bool = True


@dataclass(frozen=True)
class ScanResult:
    """Table of one scan plus the fitted decay of its residuals"""

    measure_id: str
    system: str
    space: Space | None
    residual_kind: ResidualKind
    claimed_order: str
    claimed_rate: float
    points: tuple[ScanPoint, ...]
    fitted_rate: float | None
    fitted_prefactor: float | None
    exact_match: bool
    log_growth: float | None

    @property
    def rate_window(self) -> tuple[float, float]:
        """Accepted rates, shifted when the claim is not O(1/D)"""
        low, high = get_settings().rate_window
        shift = self.claimed_rate + 1.0
        return (low + shift, high + shift)

    @property
    def rate_within_window(self) -> bool:
        if self.exact_match:
            return True
        if self.fitted_rate is None:
            return False
        low, high = self.rate_window
        return low <= self.fitted_rate <= high

    @property
    def within_envelope(self) -> bool:
        """|residual| at the largest D stays inside max(5|c₁|/D, 0.1)"""
        if self.exact_match:
            return True
        last = self.points[-1]
        prefactor = abs(self.fitted_prefactor) if self.fitted_prefactor is not None else 0.0
        return abs(last.residual) <= max(5.0 * prefactor / last.dimension, 0.1)

    @property
    def passed(self) -> bool:
        return self.rate_within_window and self.within_envelope


def residual(kind: ResidualKind, exact: float, predicted: float, dimension: int) -> float:
    if kind is ResidualKind.RELATIVE:
        return exact / predicted - 1.0
    return (exact - predicted) / dimension


def fit_rate(
    dimensions: list[int], residuals: list[float], floor: float | None = None
) -> tuple[float | None, float | None]:
    """
    Least-squares slope and prefactor of log|residual| against log D

    Residuals at or below the floor carry no slope information and are
    dropped; fewer than two usable points give (None, None).
    """
    floor = get_settings().exact_residual_floor if floor is None else floor
    pairs = [(d, abs(r)) for d, r in zip(dimensions, residuals, strict=True) if abs(r) > floor]
    if len(pairs) < 2:
        return None, None
    log_d = np.log([d for d, _ in pairs])
    log_r = np.log([r for _, r in pairs])
    slope, intercept = np.polyfit(log_d, log_r, 1)
    return float(slope), float(math.exp(intercept))


def _check_dimensions(dimensions: list[int]) -> list[int]:
    if len(dimensions) < 4:
        raise DomainError(f"a convergence scan needs at least 4 dimensions, got {len(dimensions)}")
    if any(int(d) != d or d < 2 for d in dimensions):
        raise DomainError(f"scan dimensions must be integers ≥ 2, got {dimensions}")
    if any(b <= a for a, b in zip(dimensions, dimensions[1:], strict=False)):
        raise DomainError(f"scan dimensions must be strictly ascending, got {dimensions}")
    return [int(d) for d in dimensions]


def _exact_params(measure_id: str, params: MeasureParams, exactness: str) -> tuple[str, MeasureParams]:
    """Registry id and resolved orders that produce the exact values"""
    registry_id = _EXACT_MEASURE.get(measure_id, measure_id)
    if measure_id == "heisenberg_second_order":
        params = MeasureParams(alpha=2.0, method=params.method)
    if exactness == "quadrature":
        if registry_id == "fisher":
            registry_id = "fisher_moments"
        params = MeasureParams(
            alpha=params.alpha, beta=params.beta, q=params.q, p=params.p, method="quadrature"
        )
    return registry_id, get_measure(registry_id).resolve(params)


def prediction_params(template: QuantumState, params: MeasureParams) -> PredictionParams:
    """State labels and measure orders of a prediction"""
    defaults = PredictionParams()
    return PredictionParams(
        strength=template.strength,
        n=template.n,
        l=template.l,
        m=template.m,
        alpha=params.alpha if params.alpha is not None else defaults.alpha,
        beta=params.beta if params.beta is not None else defaults.beta,
        q=params.q if params.q is not None else defaults.q,
        p=params.p if params.p is not None else defaults.p,
    )


def convergence_scan(
    measure_id: str,
    template: QuantumState,
    dimensions: list[int] | None = None,
    *,
    space: Space | str | None = None,
    params: MeasureParams | None = None,
    exactness: str = "closed",
) -> ScanResult:
    """
    Compare exact values of a measure with its leading-order prediction over D

    Args:
        measure_id: catalogue identifier of the prediction
        template: state whose labels are carried to every dimension
        dimensions: ascending list of at least four D values (settings default)
        space: position or momentum for per-space measures
        params: measure orders; unset orders take the measure's defaults
        exactness: "closed" prefers closed forms, "quadrature" forces quadrature

    Returns:
        ScanResult with one point per dimension, in input order

    Raises:
        NonConvergenceError: an exact value did not converge
    """
    settings = get_settings()
    if exactness not in EXACTNESS:
        raise DomainError(f"exactness must be one of {EXACTNESS}, got {exactness!r}")
    entry = catalogue_entry(measure_id)
    dimensions = _check_dimensions(list(dimensions or settings.scan_dimensions))
    registry_id, measure_params = _exact_params(measure_id, params or MeasureParams(), exactness)
    prediction: AsymptoticPrediction = build_prediction(
        measure_id,
        template.system,
        space if entry.per_space else None,
        prediction_params(template, measure_params),
    )

    logger.info(
        f"Convergence scan {measure_id} ({template.system.value}, "
        f"{prediction.space.value if prediction.space else 'combined'}) over D = {dimensions}"
    )

    def exact_at(dimension: int) -> MeasureValue:
        return evaluate_measure(
            registry_id, template.with_dimension(dimension), prediction.space, measure_params
        )

    with ThreadPoolExecutor(max_workers=settings.max_workers) as pool:
        values = list(pool.map(exact_at, dimensions))

    stalled = [d for d, v in zip(dimensions, values, strict=True) if not v.converged]
    if stalled:
        raise NonConvergenceError(
            f"{measure_id} did not converge at D = {stalled} for {template.label()}"
        )

    points = []
    for dimension, value in zip(dimensions, values, strict=True):
        predicted = prediction.evaluate(dimension)
        points.append(
            ScanPoint(
                dimension=dimension,
                exact=value.value,
                predicted=predicted,
                residual=residual(prediction.residual, value.value, predicted, dimension),
                converged=value.converged,
            )
        )

    floor = settings.exact_residual_floor
    exact_match = all(abs(p.residual) <= floor for p in points)
    fitted_rate = fitted_prefactor = None
    if not exact_match:
        # the smallest D sits before the asymptotic regime
        fitted_rate, fitted_prefactor = fit_rate(
            [p.dimension for p in points[1:]], [p.residual for p in points[1:]], floor
        )

    log_growth = None
    if prediction.residual is ResidualKind.ADDITIVE:
        log_growth = max(abs(p.exact - p.predicted) / math.log(p.dimension) for p in points)

    result = ScanResult(
        measure_id=measure_id,
        system=template.system.value,
        space=prediction.space,
        residual_kind=prediction.residual,
        claimed_order=prediction.claimed_order,
        claimed_rate=prediction.claimed_rate,
        points=tuple(points),
        fitted_rate=fitted_rate,
        fitted_prefactor=fitted_prefactor,
        exact_match=exact_match,
        log_growth=log_growth,
    )
    logger.info(
        f"Scan {measure_id} finished: rate={fitted_rate}, exact_match={exact_match}, "
        f"passed={result.passed}"
    )
    return result
