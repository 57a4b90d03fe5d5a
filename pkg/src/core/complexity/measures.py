"""
Crámer-Rao, Fisher-Shannon and LMC-Rényi complexities

All three are dimensionless, invariant under scaling of the density and
bounded from below: C_CR ≥ D², C_FS ≥ D and C̄_{α,β} ≥ 1 for α < β.
"""

import math
from dataclasses import dataclass, field
from enum import Enum

from src.core.infomeasures.entropies import entropic_moment, is_shannon_order, renyi, shannon
from src.core.infomeasures.fisher import fisher_closed
from src.core.moments.models import Method
from src.core.moments.radial import variance
from src.core.states.models import QuantumState, Space
from src.exceptions import DomainError


class ComplexityKind(str, Enum):
    CRAMER_RAO = "cramer_rao"
    FISHER_SHANNON = "fisher_shannon"
    LMC = "lmc"
    LMC_RENYI = "lmc_renyi"


@dataclass(frozen=True)
class ComplexityValue:
    """A complexity value with its universal lower bound"""

    kind: ComplexityKind
    space: Space
    value: float
    lower_bound: float
    method: Method = Method.CLOSED_FORM
    converged: bool = True
    parameters: dict[str, float] = field(default_factory=dict)

    @property
    def margin(self) -> float:
        return self.value - self.lower_bound

    @property
    def ratio(self) -> float:
        """value / lower_bound, the quantity that tends to 1 at high D"""
        return self.value / self.lower_bound


def cramer_rao(state: QuantumState, space: Space | str) -> ComplexityValue:
    """C_CR = F × V"""
    space = Space(space)
    value = fisher_closed(state, space) * variance(state, space)
    return ComplexityValue(
        kind=ComplexityKind.CRAMER_RAO,
        space=space,
        value=value,
        lower_bound=float(state.dimension**2),
    )


def fisher_shannon(state: QuantumState, space: Space | str) -> ComplexityValue:
    """C_FS = F × e^{2S/D}/(2πe)"""
    space = Space(space)
    D = state.dimension
    entropy = shannon(state, space)
    log_power = 2.0 * entropy.total / D - math.log(2.0 * math.pi) - 1.0
    value = fisher_closed(state, space) * math.exp(log_power)
    return ComplexityValue(
        kind=ComplexityKind.FISHER_SHANNON,
        space=space,
        value=value,
        lower_bound=float(D),
        method=entropy.method,
        converged=entropy.converged,
    )


def lmc_renyi(
    state: QuantumState, space: Space | str, alpha: float, beta: float
) -> ComplexityValue:
    """
    LMC-Rényi complexity C̄_{α,β} = exp((R_α - R_β)/D)

    Args:
        state: validated quantum state
        space: position or momentum
        alpha: lower order, 0 < α (α = 1 means the Shannon entropy)
        beta: upper order, β > α

    Returns:
        ComplexityValue with lower bound 1
    """
    space = Space(space)
    if not 0 < alpha < beta:
        raise DomainError(f"LMC-Rényi orders need 0 < α < β, got α = {alpha}, β = {beta}")
    low = renyi(state, space, alpha)
    high = renyi(state, space, beta)
    value = math.exp((low.total - high.total) / state.dimension)
    kind = (
        ComplexityKind.LMC
        if is_shannon_order(alpha) and beta == 2.0
        else ComplexityKind.LMC_RENYI
    )
    return ComplexityValue(
        kind=kind,
        space=space,
        value=value,
        lower_bound=1.0,
        method=Method.QUADRATURE,
        converged=low.converged and high.converged,
        parameters={"alpha": alpha, "beta": beta},
    )


def lmc(state: QuantumState, space: Space | str) -> ComplexityValue:
    """Plain LMC complexity, the α → 1, β = 2 member of the LMC-Rényi family"""
    return lmc_renyi(state, space, 1.0, 2.0)


def lmc_direct(state: QuantumState, space: Space | str) -> float:
    """(𝒟 e^S)^{1/D} from the disequilibrium and the Shannon entropy separately"""
    log_disequilibrium = entropic_moment(state, space, 2.0).value
    return math.exp((log_disequilibrium + shannon(state, space).total) / state.dimension)


def space_symmetry(state: QuantumState, kind: ComplexityKind | str) -> float:
    """C[ρ]/C[γ] for the Crámer-Rao or Fisher-Shannon complexity"""
    kind = ComplexityKind(kind)
    if kind is ComplexityKind.CRAMER_RAO:
        measure = cramer_rao
    elif kind is ComplexityKind.FISHER_SHANNON:
        measure = fisher_shannon
    else:
        raise DomainError(f"space symmetry is defined for cramer_rao and fisher_shannon, not {kind.value}")
    return measure(state, Space.POSITION).value / measure(state, Space.MOMENTUM).value
