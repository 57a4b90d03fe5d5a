"""
Leading-order pseudoclassical (D → ∞) predictions

Every prediction is a sum of the terms

    c₁ D ln D + c₂ D + c₃ ln D + c₄ + Σ a_k D^{p_k}

with the coefficients depending on the system, the space, the strength and the
state labels. Entropies use the logarithmic terms; products, Fisher
informations, variances and complexities use power terms or a constant.
"""

import math
from collections.abc import Callable
from dataclasses import dataclass, field
from enum import Enum

from src.core.specfun.gamma import LOG_PI, power_limit
from src.core.states.models import Space, SystemKind
from src.exceptions import DomainError, UnknownMeasureError

LOG_TWO = math.log(2.0)


class ResidualKind(str, Enum):
    """How a scan compares exact values with the prediction"""

    RELATIVE = "relative"  # exact/predicted - 1
    ADDITIVE = "additive"  # (exact - predicted)/D


@dataclass(frozen=True)
class PredictionParams:
    """Strength, state labels and measure orders a prediction may depend on"""

    strength: float = 1.0
    n: int = 0
    l: int = 0
    m: int = 0
    alpha: float = 2.0
    beta: float = 2.0
    q: float = 2.0
    p: float = 2.0


@dataclass(frozen=True)
class AsymptoticPrediction:
    """A leading-order model and the remainder it claims"""

    measure_id: str
    system: SystemKind
    space: Space | None
    d_log_d: float = 0.0
    d: float = 0.0
    log_d: float = 0.0
    constant: float = 0.0
    powers: tuple[tuple[float, float], ...] = ()
    residual: ResidualKind = ResidualKind.RELATIVE
    claimed_rate: float = -1.0
    claimed_order: str = "relative O(1/D)"

    def evaluate(self, dimension: float) -> float:
        if dimension < 2:
            raise DomainError(f"predictions need D ≥ 2, got {dimension}")
        D = float(dimension)
        log_d = math.log(D)
        total = self.d_log_d * D * log_d + self.d * D + self.log_d * log_d + self.constant
        for prefactor, power in self.powers:
            total += prefactor * D**power
        return total


def log_q_power(q: float) -> float:
    """ln q^{1/(q-1)}, equal to 1 at q = 1"""
    return math.log(power_limit(q))


def log_q_tilde_power(q: float) -> float:
    """ln q̃^{1/(q-1)} with q̃ = ((2q-1)^{2q-1}/q^{2q})^{1/2}; tends to 0 at q = 1"""
    if not q > 0.5:
        raise DomainError(f"momentum-space Rényi asymptotics need q > 1/2, got {q}")
    if abs(q - 1.0) < 1e-8:
        return 0.5 * (q - 1.0)
    log_tilde = 0.5 * ((2.0 * q - 1.0) * math.log(2.0 * q - 1.0) - 2.0 * q * math.log(q))
    return log_tilde / (q - 1.0)


def _entropy_terms(
    system: SystemKind, space: Space, strength: float, q: float | None
) -> tuple[float, float]:
    """(coefficient of D ln D, coefficient of D) of R_q, or of S when q is None"""
    log_strength = math.log(strength)
    if system is SystemKind.HYDROGENIC:
        if space is Space.POSITION:
            log_q = 0.0 if q is None else log_q_power(q) - 1.0
            return 1.5, -1.5 * LOG_TWO + log_q + 0.5 * (1.0 + LOG_PI) - log_strength
        log_q = 0.0 if q is None else -log_q_tilde_power(q)
        return -1.5, 1.5 * LOG_TWO + log_strength + 0.5 * (1.0 + LOG_PI) + log_q

    log_q = 1.0 if q is None else log_q_power(q)
    sign = -1.0 if space is Space.POSITION else 1.0
    return 0.0, 0.5 * (log_q + LOG_PI + sign * log_strength)


def _renyi(system: SystemKind, space: Space, params: PredictionParams) -> AsymptoticPrediction:
    q = params.q
    if q == 1.0:
        return _shannon(system, space, params)
    d_log_d, d = _entropy_terms(system, space, params.strength, q)
    radial_degree = params.n - params.l - 1 if system is SystemKind.HYDROGENIC else params.n
    return AsymptoticPrediction(
        measure_id="renyi",
        system=system,
        space=space,
        d_log_d=d_log_d,
        d=d,
        log_d=q * radial_degree / (1.0 - q),
        residual=ResidualKind.ADDITIVE,
        claimed_order="additive O(1)",
    )


def _shannon(system: SystemKind, space: Space, params: PredictionParams) -> AsymptoticPrediction:
    d_log_d, d = _entropy_terms(system, space, params.strength, None)
    return AsymptoticPrediction(
        measure_id="shannon",
        system=system,
        space=space,
        d_log_d=d_log_d,
        d=d,
        residual=ResidualKind.ADDITIVE,
        claimed_order="additive O(ln D)",
    )


def _heisenberg(system: SystemKind, space: Space | None, params: PredictionParams) -> AsymptoticPrediction:
    return AsymptoticPrediction(
        measure_id="heisenberg",
        system=system,
        space=None,
        powers=((0.5**params.alpha, params.alpha),),
    )


def _heisenberg_second_order(
    system: SystemKind, space: Space | None, params: PredictionParams
) -> AsymptoticPrediction:
    if system is SystemKind.HYDROGENIC:
        first = 10 * params.n - 6 * params.l - 9
    else:
        first = 8 * params.n + 4 * params.l
    return AsymptoticPrediction(
        measure_id="heisenberg_second_order",
        system=system,
        space=None,
        powers=((0.25, 2.0), (0.25 * first, 1.0)),
        claimed_rate=-2.0,
        claimed_order="relative O(1/D²)",
    )


def _radial_moment(system: SystemKind, space: Space, params: PredictionParams) -> AsymptoticPrediction:
    alpha = params.alpha
    strength = params.strength
    if system is SystemKind.HYDROGENIC:
        if space is Space.POSITION:
            term = ((4.0 * strength) ** -alpha, 2.0 * alpha)
        else:
            term = ((2.0 * strength) ** alpha, -alpha)
    else:
        base = 0.5 / strength if space is Space.POSITION else 0.5 * strength
        term = (base ** (0.5 * alpha), 0.5 * alpha)
    return AsymptoticPrediction(
        measure_id="radial_moment", system=system, space=space, powers=(term,)
    )


def _variance(system: SystemKind, space: Space, params: PredictionParams) -> AsymptoticPrediction:
    moment = _radial_moment(system, space, PredictionParams(strength=params.strength, alpha=2.0))
    return AsymptoticPrediction(
        measure_id="variance", system=system, space=space, powers=moment.powers
    )


def _fisher(system: SystemKind, space: Space, params: PredictionParams) -> AsymptoticPrediction:
    strength = params.strength
    if system is SystemKind.HYDROGENIC:
        if space is Space.POSITION:
            term = (16.0 * strength**2, -2.0)
        else:
            term = (0.25 / strength**2, 4.0)
    else:
        term = (2.0 * strength, 1.0) if space is Space.POSITION else (2.0 / strength, 1.0)
    return AsymptoticPrediction(measure_id="fisher", system=system, space=space, powers=(term,))


def _fisher_product(system: SystemKind, space: Space | None, params: PredictionParams) -> AsymptoticPrediction:
    return AsymptoticPrediction(
        measure_id="fisher_product", system=system, space=None, powers=((4.0, 2.0),)
    )


def _renyi_sum(system: SystemKind, space: Space | None, params: PredictionParams) -> AsymptoticPrediction:
    p = params.p
    q = p / (2.0 * p - 1.0)
    return AsymptoticPrediction(
        measure_id="renyi_sum",
        system=system,
        space=None,
        d=LOG_PI + 0.5 * log_q_power(p) + 0.5 * log_q_power(q),
    )


def _shannon_sum(system: SystemKind, space: Space | None, params: PredictionParams) -> AsymptoticPrediction:
    return AsymptoticPrediction(
        measure_id="shannon_sum",
        system=system,
        space=None,
        d=1.0 + LOG_PI,
        claimed_order="relative O(ln D/D)",
    )


def _cramer_rao(system: SystemKind, space: Space, params: PredictionParams) -> AsymptoticPrediction:
    return AsymptoticPrediction(
        measure_id="cramer_rao", system=system, space=space, powers=((1.0, 2.0),)
    )


def _fisher_shannon(system: SystemKind, space: Space, params: PredictionParams) -> AsymptoticPrediction:
    return AsymptoticPrediction(
        measure_id="fisher_shannon", system=system, space=space, powers=((1.0, 1.0),)
    )


def lmc_renyi_limit(system: SystemKind, space: Space, alpha: float, beta: float) -> float:
    """High-D constant of C̄_{α,β}; α = 1 or β = 1 stand for the Shannon entropy"""
    if not 0 < alpha < beta:
        raise DomainError(f"LMC-Rényi orders need 0 < α < β, got α = {alpha}, β = {beta}")
    # ln C̄ → (R_α - R_β)/D, so only the coefficients of D survive
    _, low = _entropy_terms(system, space, 1.0, None if alpha == 1.0 else alpha)
    _, high = _entropy_terms(system, space, 1.0, None if beta == 1.0 else beta)
    return math.exp(low - high)


def _lmc_renyi(system: SystemKind, space: Space, params: PredictionParams) -> AsymptoticPrediction:
    return AsymptoticPrediction(
        measure_id="lmc_renyi",
        system=system,
        space=space,
        constant=lmc_renyi_limit(system, space, params.alpha, params.beta),
        claimed_order="relative O(ln D/D)",
    )


def _lmc(system: SystemKind, space: Space, params: PredictionParams) -> AsymptoticPrediction:
    return AsymptoticPrediction(
        measure_id="lmc",
        system=system,
        space=space,
        constant=lmc_renyi_limit(system, space, 1.0, 2.0),
        claimed_order="relative O(ln D/D)",
    )


Builder = Callable[[SystemKind, Space, PredictionParams], AsymptoticPrediction]


@dataclass(frozen=True)
class CatalogueEntry:
    measure_id: str
    per_space: bool
    parameters: tuple[str, ...]
    description: str
    builder: Builder = field(repr=False)


CATALOGUE: dict[str, CatalogueEntry] = {
    entry.measure_id: entry
    for entry in (
        CatalogueEntry("heisenberg", False, ("alpha",), "⟨r^α⟩⟨p^α⟩ → (D/2)^α", _heisenberg),
        CatalogueEntry(
            "heisenberg_second_order",
            False,
            ("n", "l"),
            "⟨r²⟩⟨p²⟩ through its 1/D correction",
            _heisenberg_second_order,
        ),
        CatalogueEntry("radial_moment", True, ("alpha",), "⟨r^α⟩ or ⟨p^α⟩", _radial_moment),
        CatalogueEntry("variance", True, (), "⟨r²⟩ or ⟨p²⟩", _variance),
        CatalogueEntry("fisher", True, (), "Fisher information", _fisher),
        CatalogueEntry("fisher_product", False, (), "F[ρ]F[γ] → 4D²", _fisher_product),
        CatalogueEntry("renyi", True, ("q", "n", "l"), "Rényi entropy R_q", _renyi),
        CatalogueEntry("shannon", True, (), "Shannon entropy", _shannon),
        CatalogueEntry("renyi_sum", False, ("p",), "R_p[ρ] + R_q[γ], 1/p+1/q = 2", _renyi_sum),
        CatalogueEntry("shannon_sum", False, (), "S[ρ] + S[γ] → D ln(eπ)", _shannon_sum),
        CatalogueEntry("cramer_rao", True, (), "Crámer-Rao complexity → D²", _cramer_rao),
        CatalogueEntry("fisher_shannon", True, (), "Fisher-Shannon complexity → D", _fisher_shannon),
        CatalogueEntry("lmc_renyi", True, ("alpha", "beta"), "LMC-Rényi complexity constant", _lmc_renyi),
        CatalogueEntry("lmc", True, (), "LMC complexity constant", _lmc),
    )
}


def catalogue_entry(measure_id: str) -> CatalogueEntry:
    try:
        return CATALOGUE[measure_id]
    except KeyError:
        raise UnknownMeasureError(
            f"no asymptotic prediction for {measure_id!r}; known: {', '.join(CATALOGUE)}"
        ) from None


def build_prediction(
    measure_id: str,
    system: SystemKind | str,
    space: Space | str | None,
    params: PredictionParams | None = None,
) -> AsymptoticPrediction:
    """The leading-order model of one catalogued measure"""
    entry = catalogue_entry(measure_id)
    system = SystemKind(system)
    if entry.per_space:
        if space is None:
            raise DomainError(f"{measure_id} is defined per space; pass position or momentum")
        space = Space(space)
    else:
        space = None
    return entry.builder(system, space, params or PredictionParams())  # type: ignore[arg-type]


def predict(
    measure_id: str,
    system: SystemKind | str,
    space: Space | str | None,
    params: PredictionParams | None,
    dimension: int,
) -> float:
    """
    Evaluate the leading-order prediction of a measure at dimension D

    Args:
        measure_id: catalogue identifier
        system: hydrogenic or oscillator
        space: position or momentum for per-space measures, None otherwise
        params: strength, state labels and measure orders
        dimension: D ≥ 2

    Returns:
        Predicted value
    """
    return build_prediction(measure_id, system, space, params).evaluate(dimension)
