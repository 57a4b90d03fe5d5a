"""
Position-momentum uncertainty relations and their margins
"""

import math
from dataclasses import dataclass, field

from src.config import get_settings
from src.core.infomeasures.entropies import renyi, shannon
from src.core.infomeasures.fisher import fisher_closed
from src.core.moments.radial import closed_moment
from src.core.specfun.gamma import LOG_PI, power_limit
from src.core.states.models import QuantumState, Space
from src.exceptions import ConjugacyError


def conjugate_order(p: float) -> float:
    """q with 1/p + 1/q = 2"""
    if not p > 0.5:
        raise ConjugacyError(f"a conjugate order exists only for p > 1/2, got {p}")
    return p / (2.0 * p - 1.0)


def check_conjugate(p: float, q: float) -> None:
    tolerance = get_settings().conjugacy_tolerance
    if not (p > 0 and q > 0) or abs(1.0 / p + 1.0 / q - 2.0) > tolerance:
        raise ConjugacyError(
            f"orders must satisfy 1/p + 1/q = 2, got p = {p:g}, q = {q:g}"
        )


def shannon_bound(dimension: int) -> float:
    """D(1 + ln π)"""
    return dimension * (1.0 + LOG_PI)


def renyi_bound(dimension: int, p: float, q: float) -> float:
    """D ln(p^{1/(2(p-1))} q^{1/(2(q-1))} π); tends to D(1 + ln π) at p = q = 1"""
    return dimension * (
        0.5 * math.log(power_limit(p)) + 0.5 * math.log(power_limit(q)) + LOG_PI
    )


def fisher_bound(dimension: int) -> float:
    return 4.0 * dimension**2


def heisenberg_bound(dimension: int) -> float:
    return 0.25 * dimension**2


@dataclass(frozen=True)
class UncertaintyReport:
    """Entropic sums and uncertainty products against their universal bounds

    Sum margins are value - bound, product margins value/bound - 1.
    """

    dimension: int
    p: float
    q: float
    shannon_sum: float
    shannon_bound: float
    renyi_sum: float
    renyi_bound: float
    fisher_product: float
    fisher_bound: float
    heisenberg_product: float
    heisenberg_bound: float
    margins: dict[str, float] = field(default_factory=dict)

    @property
    def ratios(self) -> dict[str, float]:
        return {
            "shannon": self.shannon_sum / self.shannon_bound,
            "renyi": self.renyi_sum / self.renyi_bound,
            "fisher": self.fisher_product / self.fisher_bound,
            "heisenberg": self.heisenberg_product / self.heisenberg_bound,
        }

    @property
    def worst_margin(self) -> float:
        return min(self.margins.values())

    def holds(self, tolerance: float | None = None) -> bool:
        if tolerance is None:
            tolerance = get_settings().bound_tolerance
        return self.worst_margin >= -tolerance


def uncertainty_report(
    state: QuantumState, p: float = 1.0, q: float | None = None
) -> UncertaintyReport:
    """
    Evaluate the Shannon, Rényi, Fisher and Heisenberg uncertainty relations

    Args:
        state: validated quantum state
        p: Rényi order of the position density
        q: Rényi order of the momentum density; the conjugate of p by default

    Returns:
        UncertaintyReport with R_p[ρ] + R_q[γ] as the Rényi sum

    Raises:
        ConjugacyError: 1/p + 1/q differs from 2
    """
    if q is None:
        q = conjugate_order(p)
    check_conjugate(p, q)
    D = state.dimension

    shannon_sum = shannon(state, Space.POSITION).total + shannon(state, Space.MOMENTUM).total
    renyi_sum = renyi(state, Space.POSITION, p).total + renyi(state, Space.MOMENTUM, q).total
    fisher_product = fisher_closed(state, Space.POSITION) * fisher_closed(
        state, Space.MOMENTUM
    )
    heisenberg = closed_moment(state, Space.POSITION, 2) * closed_moment(
        state, Space.MOMENTUM, 2
    )

    bounds = {
        "shannon": shannon_bound(D),
        "renyi": renyi_bound(D, p, q),
        "fisher": fisher_bound(D),
        "heisenberg": heisenberg_bound(D),
    }
    margins = {
        "shannon": shannon_sum - bounds["shannon"],
        "renyi": renyi_sum - bounds["renyi"],
        "fisher": fisher_product / bounds["fisher"] - 1.0,
        "heisenberg": heisenberg / bounds["heisenberg"] - 1.0,
    }
    return UncertaintyReport(
        dimension=D,
        p=p,
        q=q,
        shannon_sum=shannon_sum,
        shannon_bound=bounds["shannon"],
        renyi_sum=renyi_sum,
        renyi_bound=bounds["renyi"],
        fisher_product=fisher_product,
        fisher_bound=bounds["fisher"],
        heisenberg_product=heisenberg,
        heisenberg_bound=bounds["heisenberg"],
        margins=margins,
    )
