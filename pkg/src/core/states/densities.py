"""
Radial probability densities of hydrogenic and oscillator states

Every radial density is mapped onto a classical weight variable u:

    hydrogenic position   u = r/Λ                         Laguerre, α = 2l+D-2
    oscillator position   u = λ r²                        Laguerre, α = l+D/2-1
    oscillator momentum   u = p²/λ                        Laguerre, α = l+D/2-1
    hydrogenic momentum   y = (1-s²)/(1+s²), s = ηp/Z     Jacobi/Gegenbauer, α = L+1

In u the probability P(u) du = R(r) r^{D-1} dr is a classical weight times
the square of an orthonormal polynomial, which is what the quadrature
engine integrates. Densities are always built in log form first.
"""

import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

from src.core.specfun.log_value import LogValue
from src.core.specfun.polynomials import (
    PolyFamily,
    gegenbauer_parameters,
    log_abs_polynomial,
)
from src.core.states.models import QuantumState, Space, SystemKind
from src.exceptions import DomainError, LogValueOverflowError

LOG_RANGE = 1.0e6


@dataclass(frozen=True)
class DensityFactor:
    """One-dimensional probability factor in its weight variable u

    P(u) = exp(log_weight_const) · w(u) · p̃(u)², with
    w(u) = u^a e^{-u} (Laguerre) or (1-u)^a (1+u)^b (Jacobi).

    The density whose logarithm enters entropies is
    ln f(u) = log_density_const + Σ e_i ln(distance to endpoint i)
              - density_rate·u + 2 ln|p̃(u)|,
    so that P = f × (the measure written in u).
    """

    family: PolyFamily
    weight_exponents: tuple[float, ...]
    log_weight_const: float
    poly_params: tuple[float, ...]
    degree: int
    density_exponents: tuple[float, ...]
    log_density_const: float
    density_rate: float

    def log_poly(self, u: ArrayLike) -> NDArray[np.float64]:
        return log_abs_polynomial(self.family, self.poly_params, self.degree, u)

    def endpoint_logs(
        self, u: ArrayLike
    ) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
        """(ln u, 0) for Laguerre; (ln(1-u), ln(1+u)) for Jacobi"""
        points = np.atleast_1d(np.asarray(u, dtype=np.float64))
        with np.errstate(divide="ignore", invalid="ignore"):
            if self.family is PolyFamily.LAGUERRE:
                return np.log(points), np.zeros_like(points)
            return np.log1p(-points), np.log1p(points)

    def log_density_from_parts(
        self,
        u: NDArray[np.float64],
        log_first: NDArray[np.float64],
        log_second: NDArray[np.float64],
        log_poly: NDArray[np.float64],
    ) -> NDArray[np.float64]:
        """ln f from precomputed endpoint logarithms and ln|p̃|"""
        total = self.log_density_const + 2.0 * log_poly
        exponents = self.density_exponents
        total = total + _power_term(exponents[0], log_first)
        if self.family is PolyFamily.LAGUERRE:
            total = total - self.density_rate * u
        else:
            total = total + _power_term(exponents[1], log_second)
        return total

    def log_density(self, u: ArrayLike) -> NDArray[np.float64]:
        points = np.atleast_1d(np.asarray(u, dtype=np.float64))
        log_first, log_second = self.endpoint_logs(points)
        return self.log_density_from_parts(
            points, log_first, log_second, self.log_poly(points)
        )

    def log_probability(self, u: ArrayLike) -> NDArray[np.float64]:
        """ln P(u), the probability per unit u"""
        points = np.atleast_1d(np.asarray(u, dtype=np.float64))
        log_first, log_second = self.endpoint_logs(points)
        total = self.log_weight_const + 2.0 * self.log_poly(points)
        total = total + _power_term(self.weight_exponents[0], log_first)
        if self.family is PolyFamily.LAGUERRE:
            return total - points
        return total + _power_term(self.weight_exponents[1], log_second)


def _power_term(exponent: float, log_base: NDArray[np.float64]) -> NDArray[np.float64]:
    # 0 · ln 0 = 0
    if exponent == 0.0:
        return np.zeros_like(log_base)
    return exponent * log_base


@dataclass(frozen=True)
class RadialDensity(DensityFactor):
    """Radial factor R of a density, with its map from r (or p) to u

    Laguerre densities use u = (r/scale)^tau; the hydrogenic momentum
    density uses y = (1-s²)/(1+s²) with s = p/scale.
    """

    space: Space
    system: SystemKind
    dimension: int
    scale: float
    tau: int

    @property
    def normalization(self) -> LogValue:
        """Prefactor of R in front of the u-dependent part"""
        return LogValue(self.log_density_const, 1)

    def moment_shift(self, alpha: float) -> tuple[float, ...]:
        """Weight-exponent shift that turns ⟨r^α⟩ into an integral over P"""
        if self.family is PolyFamily.LAGUERRE:
            return (alpha / self.tau,)
        return (0.5 * alpha, -0.5 * alpha)

    def log_radial_value(self, radius: ArrayLike) -> NDArray[np.float64]:
        """ln R at radii (or momenta) ≥ 0"""
        r = np.atleast_1d(np.asarray(radius, dtype=np.float64))
        if np.any(r < 0):
            raise DomainError("radial argument must be non-negative")
        s = r / self.scale

        if self.family is PolyFamily.LAGUERRE:
            u = s**self.tau
            with np.errstate(divide="ignore"):
                log_u = self.tau * np.log(s)
            logs = self.log_density_from_parts(
                u, log_u, np.zeros_like(u), self.log_poly(u)
            )
        else:
            s2 = s * s
            y = (1.0 - s2) / (1.0 + s2)
            log_plus = math.log(2.0) - np.log1p(s2)
            with np.errstate(divide="ignore"):
                log_minus = math.log(2.0) + 2.0 * np.log(s) - np.log1p(s2)
            logs = self.log_density_from_parts(y, log_minus, log_plus, self.log_poly(y))

        finite = logs[np.isfinite(logs)]
        if finite.size and np.max(np.abs(finite)) > LOG_RANGE:
            raise LogValueOverflowError(
                f"radial log-density outside ±{LOG_RANGE:.0e}; check the scale of the input"
            )
        return logs


def radial_density(state: QuantumState, space: Space | str) -> RadialDensity:
    """
    Radial density descriptor of a state in position or momentum space

    Args:
        state: validated quantum state
        space: position or momentum

    Returns:
        RadialDensity normalized so that ∫ R r^{D-1} dr = 1
    """
    space = Space(space)
    D = state.dimension
    l = state.l
    k = state.radial_degree

    if state.is_hydrogenic:
        eta = state.eta
        Z = state.strength
        if space is Space.POSITION:
            alpha = 2.0 * l + D - 2.0
            scale = state.length_scale
            return RadialDensity(
                family=PolyFamily.LAGUERRE,
                weight_exponents=(alpha + 1.0,),
                log_weight_const=-math.log(2.0 * eta),
                poly_params=(alpha,),
                degree=k,
                density_exponents=(2.0 * l,),
                log_density_const=-D * math.log(scale) - math.log(2.0 * eta),
                density_rate=1.0,
                space=space,
                system=state.system,
                dimension=D,
                scale=scale,
                tau=1,
            )

        big_l = state.big_l
        return RadialDensity(
            family=PolyFamily.JACOBI,
            weight_exponents=(big_l + 0.5, big_l + 1.5),
            log_weight_const=0.0,
            poly_params=gegenbauer_parameters(big_l + 1.0),
            degree=k,
            density_exponents=(float(l), float(l + D + 1)),
            log_density_const=D * math.log(eta / Z),
            density_rate=0.0,
            space=space,
            system=state.system,
            dimension=D,
            scale=Z / eta,
            tau=1,
        )

    lam = state.strength
    alpha = l + 0.5 * D - 1.0
    sign = 1.0 if space is Space.POSITION else -1.0
    return RadialDensity(
        family=PolyFamily.LAGUERRE,
        weight_exponents=(alpha,),
        log_weight_const=0.0,
        poly_params=(alpha,),
        degree=k,
        density_exponents=(float(l),),
        log_density_const=math.log(2.0) + sign * 0.5 * D * math.log(lam),
        density_rate=1.0,
        space=space,
        system=state.system,
        dimension=D,
        scale=lam ** (-0.5 * sign),
        tau=2,
    )


def log_radial_density_at(
    state: QuantumState, space: Space | str, r_or_p: ArrayLike
) -> NDArray[np.float64]:
    """ln R(r) (or ln R(p)) with the angular part divided out"""
    return radial_density(state, space).log_radial_value(r_or_p)


def radial_density_at(state: QuantumState, space: Space | str, r_or_p: float) -> float:
    """R(r) (or R(p)) with the angular part divided out"""
    return float(np.exp(log_radial_density_at(state, space, r_or_p)[0]))
