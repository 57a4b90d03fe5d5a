"""
Verification suites

Every suite walks a state matrix and reports one PropertyCheck per
(property, state), carrying the margin by which the property holds. A suite
passes when every check does.

    bounds       complexities above their universal lower bounds
    uncertainty  Shannon, conjugate Rényi, Fisher and Heisenberg relations
    crosscheck   closed forms against quadrature, Fisher triple oracle
    asymptotics  convergence scans and the high-D discrimination claims
    properties   scaling, λ-duality, Rényi monotonicity, polynomials, CSV
"""

import io
import math
from collections.abc import Callable, Iterator
from dataclasses import dataclass, field

import numpy as np
from loguru import logger

from src.config import get_settings
from src.core.asymptotics.convergence import ScanResult, convergence_scan
from src.core.asymptotics.predictions import PredictionParams, lmc_renyi_limit, predict
from src.core.complexity.measures import (
    ComplexityValue,
    cramer_rao,
    fisher_shannon,
    lmc,
    lmc_direct,
)
from src.core.infomeasures.entropies import renyi, shannon
from src.core.infomeasures.fisher import fisher_closed, fisher_direct, fisher_via_moments
from src.core.infomeasures.uncertainty import uncertainty_report
from src.core.measures.registry import MeasureParams
from src.core.moments.radial import has_closed_moment, moment_cross_check, radial_moment
from src.core.output.writers import build_meta, write_csv
from src.core.specfun.polynomials import PolyFamily, gegenbauer_parameters, orthonormal_values
from src.core.specfun.quadrature import gauss_rule
from src.core.states.models import QuantumState, Space, SystemKind
from src.core.sweep.models import StateTemplate, SweepSpec
from src.core.sweep.runner import run_sweep
from src.exceptions import DomainError, SpreadError

SUITES = ("bounds", "uncertainty", "crosscheck", "asymptotics", "properties")
MATRICES = ("small", "full")

CONJUGATE_ORDERS = (2.0, 3.0, 1.2)
CROSS_CHECK_ORDERS = (2.0, 1.0, -1.0, -2.0)
MOMENT_TOLERANCE = 1e-8
FISHER_TOLERANCE = 1e-7
SATURATION_TOLERANCE = 1e-9
PROPERTY_TOLERANCE = 1e-8
DISCRIMINATION_DIMENSION = 1000


@dataclass(frozen=True)
class PropertyCheck:
    suite: str
    name: str
    subject: str
    margin: float
    passed: bool
    detail: str = ""


@dataclass
class SuiteReport:
    suite: str
    checks: list[PropertyCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> list[PropertyCheck]:
        return [check for check in self.checks if not check.passed]

    def worst(self) -> PropertyCheck | None:
        return min(self.checks, key=lambda check: check.margin, default=None)

    def add(
        self, name: str, subject: str, margin: float, passed: bool | None = None, detail: str = ""
    ) -> None:
        if passed is None:
            passed = margin >= -get_settings().bound_tolerance
        self.checks.append(PropertyCheck(self.suite, name, subject, margin, passed, detail))


# State matrices

def state_matrix(size: str = "small") -> list[QuantumState]:
    """
    States a suite runs over

    small: D ∈ {2, 3, 5, 10}, n up to 2, l up to 1
    full: D ∈ {2, 3, 4, 5, 10, 20, 50, 100}, n up to 4, l up to 3, |m| ∈ {0, l}
    """
    if size not in MATRICES:
        raise DomainError(f"unknown matrix {size!r}; use one of {MATRICES}")
    if size == "small":
        dimensions, max_n, max_l = (2, 3, 5, 10), 2, 1
    else:
        dimensions, max_n, max_l = (2, 3, 4, 5, 10, 20, 50, 100), 4, 3

    states = []
    for system in SystemKind:
        for dimension in dimensions:
            for n in range(max_n + 1):
                for l in range(max_l + 1):
                    for m in sorted({0, l}):
                        if system is SystemKind.HYDROGENIC and not (n >= 1 and l <= n - 1):
                            continue
                        if dimension == 2 and m != l:
                            continue
                        states.append(QuantumState.from_m(system, dimension, n, l, m))
    return states


Check = tuple[str, float, bool | None, str]


def _measure_checks(
    report: SuiteReport,
    states: list[QuantumState],
    checks: Callable[[QuantumState], Iterator[Check]],
) -> SuiteReport:
    for state in states:
        try:
            for name, margin, passed, detail in checks(state):
                report.add(name, state.label(), margin, passed, detail)
        except SpreadError as e:
            report.add("evaluation", state.label(), -math.inf, False, e.describe())
    return report


# bounds

def _complexity_margins(state: QuantumState) -> Iterator[Check]:
    for space in Space:
        values: list[ComplexityValue] = [
            cramer_rao(state, space),
            fisher_shannon(state, space),
            lmc(state, space),
        ]
        for value in values:
            name = f"{value.kind.value}[{space.value}]"
            yield name, value.ratio - 1.0, None, f"value {value.value:.12g}"


def bounds_suite(states: list[QuantumState]) -> SuiteReport:
    return _measure_checks(SuiteReport("bounds"), states, _complexity_margins)


# uncertainty

def _uncertainty_margins(state: QuantumState) -> Iterator[Check]:
    report = uncertainty_report(state)
    for name in ("shannon", "fisher", "heisenberg"):
        yield name, report.margins[name], None, f"ratio {report.ratios[name]:.12g}"
    for p in CONJUGATE_ORDERS:
        conjugate = uncertainty_report(state, p)
        yield f"renyi(p={p:g}, q={conjugate.q:.6g})", conjugate.margins["renyi"], None, ""

    ground = state.n == 0 and state.l == 0 and state.strength == 1.0
    if state.system is SystemKind.OSCILLATOR and ground:
        for name in ("shannon", "fisher"):
            margin = report.margins[name]
            yield (
                f"{name} saturation",
                -abs(margin),
                abs(margin) <= SATURATION_TOLERANCE,
                f"margin {margin:.3e}",
            )


def uncertainty_suite(states: list[QuantumState]) -> SuiteReport:
    return _measure_checks(SuiteReport("uncertainty"), states, _uncertainty_margins)


# crosscheck

def _relative_check(name: str, reference: float, other: float, tolerance: float) -> Check:
    difference = abs(other - reference) / abs(reference)
    detail = f"relative difference {difference:.3e}"
    return name, tolerance - difference, difference <= tolerance, detail


def _cross_check_margins(state: QuantumState) -> Iterator[Check]:
    for space in Space:
        for alpha in CROSS_CHECK_ORDERS:
            if not has_closed_moment(state, space, alpha):
                continue
            check = moment_cross_check(state, space, alpha)
            yield _relative_check(
                f"moment[{space.value}, α={alpha:g}]",
                check.closed,
                check.quadrature.value,
                MOMENT_TOLERANCE,
            )

        closed = fisher_closed(state, space)
        yield _relative_check(
            f"fisher moments[{space.value}]",
            closed,
            fisher_via_moments(state, space).value,
            FISHER_TOLERANCE,
        )
        if state.l == 0:
            yield _relative_check(
                f"fisher direct[{space.value}]",
                closed,
                fisher_direct(state, space).value,
                FISHER_TOLERANCE,
            )
        yield _relative_check(
            f"lmc identity[{space.value}]",
            lmc(state, space).value,
            lmc_direct(state, space),
            PROPERTY_TOLERANCE,
        )


def crosscheck_suite(states: list[QuantumState]) -> SuiteReport:
    return _measure_checks(SuiteReport("crosscheck"), states, _cross_check_margins)


# asymptotics

# (catalogue id, space, params) scanned for both systems
SCAN_TARGETS: tuple[tuple[str, Space | None, MeasureParams], ...] = (
    ("heisenberg", None, MeasureParams(alpha=1.0)),
    ("heisenberg", None, MeasureParams(alpha=2.0)),
    ("heisenberg", None, MeasureParams(alpha=3.0)),
    ("heisenberg_second_order", None, MeasureParams()),
    ("fisher_product", None, MeasureParams()),
    ("cramer_rao", Space.POSITION, MeasureParams()),
    ("cramer_rao", Space.MOMENTUM, MeasureParams()),
    ("fisher_shannon", Space.POSITION, MeasureParams()),
    ("fisher_shannon", Space.MOMENTUM, MeasureParams()),
    ("shannon_sum", None, MeasureParams()),
    ("renyi_sum", None, MeasureParams(p=2.0)),
)


def _ground(system: SystemKind, dimension: int = 3) -> QuantumState:
    n = 1 if system is SystemKind.HYDROGENIC else 0
    return QuantumState.from_m(system, dimension, n, 0, 0)


def _scan_check(report: SuiteReport, result: ScanResult, subject: str) -> None:
    low, high = result.rate_window
    if result.exact_match:
        margin = 0.0
    elif result.fitted_rate is None:
        margin = -math.inf
    else:
        margin = min(result.fitted_rate - low, high - result.fitted_rate)
    rate = "exact" if result.exact_match else f"{result.fitted_rate}"
    report.add(
        f"scan {result.measure_id}"
        + (f"[{result.space.value}]" if result.space else ""),
        subject,
        margin,
        result.passed,
        f"rate {rate}, window [{low:g}, {high:g}], last residual {result.points[-1].residual:.3e}",
    )


def _entropy_growth_check(report: SuiteReport, dimensions: list[int]) -> None:
    """R₂[ρ] minus its prediction grows no faster than ln D (hydrogenic, n-l-1 ∈ {0, 1})"""
    for n in (1, 2):
        template = QuantumState.from_m(SystemKind.HYDROGENIC, 3, n, 0, 0)
        differences = []
        for dimension in dimensions:
            state = template.with_dimension(dimension)
            exact = renyi(state, Space.POSITION, 2.0).total
            predicted = predict(
                "renyi",
                SystemKind.HYDROGENIC,
                Space.POSITION,
                PredictionParams(n=n, q=2.0),
                dimension,
            )
            differences.append(abs(exact - predicted) / math.log(dimension))
        first, last = differences[0], differences[-1]
        report.add(
            "renyi growth[position, q=2]",
            template.label(),
            2.0 * first + 1e-9 - last,
            detail=f"|Δ|/ln D from {first:.4g} to {last:.4g}",
        )


def _discrimination_check(report: SuiteReport, dimension: int) -> None:
    """LMC constants tell the two systems apart at large D"""
    constants = {
        system: lmc_renyi_limit(system, Space.POSITION, 1.0, 2.0) for system in SystemKind
    }
    squared = constants[SystemKind.OSCILLATOR] ** 2
    report.add(
        "lmc constants square relation",
        "predictions",
        PROPERTY_TOLERANCE - abs(squared - constants[SystemKind.HYDROGENIC]),
    )
    for system in SystemKind:
        exact = lmc(_ground(system, dimension), Space.POSITION).value
        own = abs(exact - constants[system])
        other = min(abs(exact - c) for s, c in constants.items() if s is not system)
        report.add(
            f"lmc discrimination[{system.value}]",
            f"D={dimension}",
            other - own,
            detail=f"value {exact:.6g}, own constant {constants[system]:.6g}",
        )
        report.add(
            f"lmc within 5%[{system.value}]",
            f"D={dimension}",
            0.05 - abs(exact / constants[system] - 1.0),
        )
    momentum = lmc(_ground(SystemKind.HYDROGENIC, dimension), Space.MOMENTUM).value
    constant = lmc_renyi_limit(SystemKind.HYDROGENIC, Space.MOMENTUM, 1.0, 2.0)
    report.add(
        "lmc within 5%[hydrogenic momentum]",
        f"D={dimension}",
        0.05 - abs(momentum / constant - 1.0),
    )


def _independence_check(report: SuiteReport, dimension: int) -> None:
    """At large D complexities barely depend on (n, l, m)"""
    for system in SystemKind:
        if system is SystemKind.HYDROGENIC:
            grid = [(1, 0, 0), (2, 1, 0), (2, 1, 1), (3, 2, 1)]
        else:
            grid = [(0, 0, 0), (1, 0, 0), (1, 1, 1), (2, 2, 0)]
        values = [
            cramer_rao(QuantumState.from_m(system, dimension, n, l, m), Space.POSITION).ratio
            for n, l, m in grid
        ]
        spread = max(values) - min(values)
        # first-order label dependence on this grid stays below 40/D
        envelope = 40.0 / dimension
        report.add(
            f"label independence[{system.value}]",
            f"D={dimension}",
            envelope - spread,
            detail=f"C_CR/D² spread {spread:.3e}",
        )


def asymptotics_suite(size: str = "small") -> SuiteReport:
    report = SuiteReport("asymptotics")
    settings = get_settings()
    dimensions = [20, 50, 100, 200] if size == "small" else settings.scan_dimensions
    for system in SystemKind:
        template = _ground(system)
        for measure_id, space, params in SCAN_TARGETS:
            try:
                result = convergence_scan(
                    measure_id, template, dimensions, space=space, params=params
                )
            except SpreadError as e:
                report.add(f"scan {measure_id}", template.label(), -math.inf, False, e.describe())
                continue
            _scan_check(report, result, f"{system.value} {params.as_dict() or ''}".strip())

    _discrimination_check(report, DISCRIMINATION_DIMENSION)
    _independence_check(report, dimensions[-1])
    _entropy_growth_check(report, [d for d in dimensions if d >= 100] or dimensions[-2:])
    return report


# properties

def _scaling_checks(report: SuiteReport, states: list[QuantumState]) -> None:
    for state in states[:: max(1, len(states) // 6)]:
        scaled = state.with_strength(2.7)
        for space in Space:
            for measure in (cramer_rao, fisher_shannon, lmc):
                a, b = measure(state, space), measure(scaled, space)
                difference = abs(a.value - b.value) / a.value
                report.add(
                    f"scale invariance {a.kind.value}[{space.value}]",
                    state.label(),
                    PROPERTY_TOLERANCE - difference,
                )


def _duality_checks(report: SuiteReport) -> None:
    """γ of an oscillator with λ is ρ of the oscillator with 1/λ"""
    for lam in (0.5, 3.0):
        state = QuantumState.from_m(SystemKind.OSCILLATOR, 4, 1, 1, 0, lam)
        dual = state.with_strength(1.0 / lam)
        pairs = (
            ("shannon", shannon(state, Space.MOMENTUM).total, shannon(dual, Space.POSITION).total),
            (
                "moment α=3",
                radial_moment(state, Space.MOMENTUM, 3.0).value,
                radial_moment(dual, Space.POSITION, 3.0).value,
            ),
        )
        for name, momentum, position in pairs:
            difference = abs(momentum - position) / abs(position)
            report.add(f"λ-duality {name}", state.label(), PROPERTY_TOLERANCE - difference)


def _monotonicity_checks(report: SuiteReport, states: list[QuantumState]) -> None:
    orders = (0.5, 1.0, 2.0, 3.0)
    for state in states[:: max(1, len(states) // 6)]:
        for space in Space:
            try:
                values = [renyi(state, space, q).total for q in orders]
            except SpreadError:
                # R_q[γ] of hydrogenic states diverges for small q at low D
                continue
            rise = max(b - a for a, b in zip(values, values[1:], strict=False))
            report.add(
                f"renyi monotone[{space.value}]",
                state.label(),
                -rise,
                rise <= PROPERTY_TOLERANCE * max(1.0, abs(values[0])),
            )


def _linear(
    family: PolyFamily, params: tuple[float, ...], k: int, x: np.ndarray
) -> np.ndarray:
    values = orthonormal_values(family, params, k, x)
    return values.sign * np.exp(values.log_value)


def _polynomial_checks(report: SuiteReport) -> None:
    degree = 6
    cases = (
        (PolyFamily.LAGUERRE, (2.5,)),
        (PolyFamily.LAGUERRE, (40.0,)),
        (PolyFamily.JACOBI, (1.5, 0.5)),
        (PolyFamily.JACOBI, gegenbauer_parameters(3.0)),
    )
    for family, params in cases:
        rule = gauss_rule(family, params, degree + 4)
        table = np.array([_linear(family, params, k, rule.nodes) for k in range(degree + 1)])
        gram = (table * rule.weights) @ table.T
        error = float(np.max(np.abs(gram - np.eye(degree + 1))))
        report.add(f"orthonormality {family.value}{params}", "polynomials", PROPERTY_TOLERANCE - error)

    x = np.linspace(-0.95, 0.95, 9)
    for k in range(degree + 1):
        forward = _linear(PolyFamily.JACOBI, gegenbauer_parameters(2.0), k, x)
        backward = _linear(PolyFamily.JACOBI, gegenbauer_parameters(2.0), k, -x)
        error = float(np.max(np.abs(backward - (-1) ** k * forward)))
        report.add(f"gegenbauer parity k={k}", "polynomials", PROPERTY_TOLERANCE - error)


def _determinism_check(report: SuiteReport) -> None:
    spec = SweepSpec(
        variable="D",
        values=[3.0, 5.0, 8.0, 13.0],
        template=StateTemplate(system=SystemKind.OSCILLATOR, n=1, l=0),
        measures=["fisher", "shannon", "heisenberg2"],
        spaces=[Space.POSITION, Space.MOMENTUM],
        predict=True,
    )
    outputs = []
    for workers in (1, 4):
        stream = io.StringIO()
        write_csv(run_sweep(spec, max_workers=workers).rows, stream, build_meta("verify", timestamp=False))
        outputs.append(stream.getvalue())
    same = outputs[0] == outputs[1]
    report.add("csv determinism", "sweep", 0.0 if same else -1.0, same)


def properties_suite(states: list[QuantumState]) -> SuiteReport:
    report = SuiteReport("properties")
    _scaling_checks(report, states)
    _duality_checks(report)
    _monotonicity_checks(report, states)
    _polynomial_checks(report)
    _determinism_check(report)
    return report


def run_suite(suite: str, size: str = "small") -> list[SuiteReport]:
    """
    Run one suite, or every suite for "all"

    Args:
        suite: one of SUITES or "all"
        size: state matrix, "small" or "full"

    Returns:
        One SuiteReport per suite run
    """
    names = SUITES if suite == "all" else (suite,)
    unknown = [name for name in names if name not in SUITES]
    if unknown:
        raise DomainError(f"unknown suite {suite!r}; use one of {SUITES + ('all',)}")

    states = state_matrix(size)
    runners: dict[str, Callable[[], SuiteReport]] = {
        "bounds": lambda: bounds_suite(states),
        "uncertainty": lambda: uncertainty_suite(states),
        "crosscheck": lambda: crosscheck_suite(states),
        "asymptotics": lambda: asymptotics_suite(size),
        "properties": lambda: properties_suite(states),
    }
    reports = []
    for name in names:
        logger.info(f"Running verification suite {name} on the {size} matrix")
        report = runners[name]()
        logger.info(
            f"Suite {name}: {len(report.checks)} checks, {len(report.failures)} failures"
        )
        reports.append(report)
    return reports
