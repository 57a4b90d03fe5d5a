"""
Radial expectation values ⟨r^α⟩, ⟨p^α⟩ and Heisenberg-like products
"""

import math
from dataclasses import dataclass

from loguru import logger

from src.core.integration.functionals import moment_integral
from src.core.moments.models import MeasureValue
from src.core.states.densities import radial_density
from src.core.states.models import QuantumState, Space, SystemKind
from src.exceptions import DivergentIntegralError, DomainError, NotAvailableError

MOMENT_METHODS = ("auto", "closed", "quadrature")


def moment_range(state: QuantumState, space: Space | str) -> tuple[float, float]:
    """Open interval of orders α for which ⟨r^α⟩ (or ⟨p^α⟩) exists"""
    space = Space(space)
    low = -float(state.dimension + 2 * state.l)
    if state.is_hydrogenic and space is Space.MOMENTUM:
        return low, float(state.dimension + 2 * state.l + 2)
    return low, math.inf


def check_moment_order(state: QuantumState, space: Space | str, alpha: float) -> None:
    low, high = moment_range(state, space)
    if not low < alpha < high:
        raise DivergentIntegralError(
            f"⟨{'p' if Space(space) is Space.MOMENTUM else 'r'}^{alpha:g}⟩ diverges: "
            f"order must lie in ({low:g}, {high:g}) for {state.label()}"
        )


def _hydrogenic_position(state: QuantumState, alpha: float) -> float | None:
    eta, big_l, Z = state.eta, state.big_l, state.strength
    if alpha == 2:
        return eta**2 / (2.0 * Z**2) * (5.0 * eta**2 + 1.0 - 3.0 * big_l * (big_l + 1.0))
    if alpha == 1:
        return (3.0 * eta**2 - big_l * (big_l + 1.0)) / (2.0 * Z)
    if alpha == -1:
        return Z / eta**2
    if alpha == -2:
        return 2.0 * Z**2 / (eta**3 * (2.0 * big_l + 1.0))
    return None


def _hydrogenic_momentum(state: QuantumState, alpha: float) -> float | None:
    eta, big_l, Z = state.eta, state.big_l, state.strength
    if alpha == 2:
        return Z**2 / eta**2
    if alpha == -2:
        return eta**2 / Z**2 * (8.0 * eta - 3.0 * (2.0 * big_l + 1.0)) / (2.0 * big_l + 1.0)
    return None


def _oscillator(state: QuantumState, space: Space, alpha: float) -> float | None:
    lam = state.strength
    # position moments scale as λ^{-α/2}, momentum moments as λ^{α/2}
    scale = 1.0 / lam if space is Space.POSITION else lam
    if alpha == 2:
        return scale * (2 * state.n + state.l + 0.5 * state.dimension)
    if alpha == -2:
        return 1.0 / (scale * (state.l + 0.5 * state.dimension - 1.0))
    return None


def closed_moment(state: QuantumState, space: Space | str, alpha: float) -> float:
    """
    Exact ⟨r^α⟩ (or ⟨p^α⟩) where a closed form is known

    Args:
        state: validated quantum state
        space: position or momentum
        alpha: moment order

    Returns:
        The moment value

    Raises:
        NotAvailableError: no closed form for this combination
        DivergentIntegralError: the moment does not exist
    """
    space = Space(space)
    check_moment_order(state, space, alpha)
    if state.system is SystemKind.HYDROGENIC:
        value = (
            _hydrogenic_position(state, alpha)
            if space is Space.POSITION
            else _hydrogenic_momentum(state, alpha)
        )
    else:
        value = _oscillator(state, space, alpha)
    if value is None:
        raise NotAvailableError(
            f"no closed form for {state.system.value} {space.value} moment of order {alpha:g}"
        )
    return value


def has_closed_moment(state: QuantumState, space: Space | str, alpha: float) -> bool:
    try:
        closed_moment(state, space, alpha)
    except (NotAvailableError, DivergentIntegralError):
        return False
    return True


def quadrature_moment(
    state: QuantumState, space: Space | str, alpha: float
) -> MeasureValue:
    """⟨r^α⟩ by Gaussian quadrature over the radial density's weight variable"""
    check_moment_order(state, space, alpha)
    density = radial_density(state, space)
    result = moment_integral(
        density, density.moment_shift(alpha), alpha * math.log(density.scale)
    )
    return MeasureValue.from_quadrature(result)


def radial_moment(
    state: QuantumState, space: Space | str, alpha: float, method: str = "auto"
) -> MeasureValue:
    """
    Radial expectation value ⟨r^α⟩ (position) or ⟨p^α⟩ (momentum)

    Args:
        state: validated quantum state
        space: position or momentum
        alpha: moment order inside the existence range
        method: "auto" (closed form when known), "closed" or "quadrature"

    Returns:
        MeasureValue tagged with the method used
    """
    if method not in MOMENT_METHODS:
        raise DomainError(f"unknown moment method {method!r}; use one of {MOMENT_METHODS}")
    check_moment_order(state, space, alpha)
    if alpha == 0:
        return MeasureValue.closed(1.0)
    if method == "quadrature":
        return quadrature_moment(state, space, alpha)
    try:
        return MeasureValue.closed(closed_moment(state, space, alpha))
    except NotAvailableError:
        if method == "closed":
            raise
    return quadrature_moment(state, space, alpha)


@dataclass(frozen=True)
class MomentCrossCheck:
    """Closed form and quadrature side by side"""

    closed: float
    quadrature: MeasureValue

    @property
    def relative_difference(self) -> float:
        return abs(self.closed - self.quadrature.value) / abs(self.closed)


def moment_cross_check(
    state: QuantumState, space: Space | str, alpha: float
) -> MomentCrossCheck:
    """Evaluate a moment both ways; raises NotAvailableError without a closed form"""
    check = MomentCrossCheck(
        closed=closed_moment(state, space, alpha),
        quadrature=quadrature_moment(state, space, alpha),
    )
    logger.debug(
        f"{state.label()} {Space(space).value} α={alpha:g}: "
        f"closed {check.closed:.15g}, relative difference {check.relative_difference:.2e}"
    )
    return check


def heisenberg_product(
    state: QuantumState, alpha: float, method: str = "auto"
) -> MeasureValue:
    """⟨r^α⟩⟨p^α⟩"""
    position = radial_moment(state, Space.POSITION, alpha, method)
    momentum = radial_moment(state, Space.MOMENTUM, alpha, method)
    return position.times(momentum)


def variance(state: QuantumState, space: Space | str) -> float:
    """V = ⟨r²⟩ - |⟨r⃗⟩|² = ⟨r²⟩, the mean vector of a central density being zero"""
    return closed_moment(state, space, 2)
