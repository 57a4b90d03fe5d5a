"""
Hyperspherical harmonics |𝒴_{l,{μ}}|² as a product of one-dimensional factors

With t_j = cos θ_j and μ_1 ≡ l, factor j (j = 1 … D-2) is

    f_j(t) = [C̃^{(α_j+μ_{j+1})}_{μ_j-μ_{j+1}}(t)]² (1-t²)^{μ_{j+1}},
    α_j = (D-j-1)/2,

against the surface measure (1-t²)^{α_j-1/2} dt, and the azimuth carries a
uniform 1/(2π). Each factor is separately normalized.
"""

import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

from src.core.specfun.gamma import LOG_TWO_PI
from src.core.specfun.polynomials import PolyFamily, gegenbauer_parameters
from src.core.states.densities import DensityFactor, log_radial_density_at
from src.core.states.models import QuantumState
from src.exceptions import DomainError


@dataclass(frozen=True)
class GegenbauerFactor(DensityFactor):
    """Factor j of the hyperspherical harmonic in t = cos θ_j"""

    index: int
    alpha_j: float
    gegenbauer_alpha: float
    sine_power: int

    @property
    def is_constant_polynomial(self) -> bool:
        return self.degree == 0


@dataclass(frozen=True)
class AngularFactor:
    """D-2 polar factors plus the uniform azimuthal factor"""

    dimension: int
    factors: tuple[GegenbauerFactor, ...]
    log_azimuthal_mass: float = LOG_TWO_PI

    @property
    def is_uniform(self) -> bool:
        """True for l = 0, where |𝒴|² = 1/Ω_{D-1}"""
        return all(f.degree == 0 and f.sine_power == 0 for f in self.factors)

    def log_value(self, angles: ArrayLike) -> float:
        """ln |𝒴|² at (θ_1 … θ_{D-2}, φ); φ does not enter"""
        values = np.asarray(angles, dtype=np.float64).ravel()
        if values.size != self.dimension - 1:
            raise DomainError(
                f"expected D-1 = {self.dimension - 1} angles, got {values.size}"
            )
        total = -self.log_azimuthal_mass
        for factor, theta in zip(self.factors, values[:-1], strict=False):
            total += float(factor.log_density(np.cos(theta))[0])
        return total


def angular_factor(state: QuantumState) -> AngularFactor:
    """
    Factor descriptors of |𝒴_{l,{μ}}|² for a state

    Args:
        state: validated quantum state

    Returns:
        AngularFactor with D-2 Gegenbauer factors
    """
    D = state.dimension
    chain = (state.l, *state.mu)
    factors = []
    for j in range(1, D - 1):
        upper, lower = chain[j - 1], chain[j]
        alpha_j = 0.5 * (D - j - 1)
        gegenbauer_alpha = alpha_j + lower
        params = gegenbauer_parameters(gegenbauer_alpha)
        factors.append(
            GegenbauerFactor(
                family=PolyFamily.JACOBI,
                weight_exponents=params,
                log_weight_const=0.0,
                poly_params=params,
                degree=upper - lower,
                density_exponents=(float(lower), float(lower)),
                log_density_const=0.0,
                density_rate=0.0,
                index=j,
                alpha_j=alpha_j,
                gegenbauer_alpha=gegenbauer_alpha,
                sine_power=lower,
            )
        )
    return AngularFactor(dimension=D, factors=tuple(factors))


def log_harmonic_squared(state: QuantumState, angles: ArrayLike) -> float:
    """ln |𝒴_{l,{μ}}(Ω)|²"""
    return angular_factor(state).log_value(angles)


def full_density_at(
    state: QuantumState, space: str, r_or_p: float, angles: ArrayLike
) -> float:
    """|Ψ|² (or |Φ|²) at a point given in hyperspherical coordinates"""
    log_radial = float(log_radial_density_at(state, space, r_or_p)[0])
    return math.exp(log_radial + log_harmonic_squared(state, angles))


def cartesian_to_hyperspherical(point: ArrayLike) -> tuple[float, NDArray[np.float64]]:
    """(r, (θ_1 … θ_{D-2}, φ)) with θ_j measured from axis j"""
    x = np.asarray(point, dtype=np.float64).ravel()
    D = x.size
    if D < 2:
        raise DomainError("points need at least two coordinates")
    r = float(np.linalg.norm(x))
    angles = np.zeros(D - 1)
    for j in range(D - 2):
        tail = float(np.linalg.norm(x[j:]))
        angles[j] = math.acos(min(1.0, max(-1.0, x[j] / tail))) if tail > 0 else 0.0
    angles[-1] = math.atan2(x[-1], x[-2])
    return r, angles
