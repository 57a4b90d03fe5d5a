"""
Quantum state models for D-dimensional hydrogenic and oscillator systems
"""

import math
from dataclasses import dataclass, replace
from enum import Enum

from src.exceptions import InvalidStateError


class SystemKind(str, Enum):
    """Central potential of the single-particle system"""

    HYDROGENIC = "hydrogenic"
    OSCILLATOR = "oscillator"


class Space(str, Enum):
    """Conjugate space a density lives in"""

    POSITION = "position"
    MOMENTUM = "momentum"

    @property
    def dual(self) -> "Space":
        return Space.MOMENTUM if self is Space.POSITION else Space.POSITION


@dataclass(frozen=True)
class QuantumState:
    """Bound state (n, l, μ₂ … μ_{D-1}) of a D-dimensional central potential

    strength is the nuclear charge Z for hydrogenic systems and the
    oscillator strength λ for oscillators. An empty mu stands for the
    all-zero chain.
    """

    system: SystemKind
    dimension: int
    n: int
    l: int
    mu: tuple[int, ...] = ()
    strength: float = 1.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "system", SystemKind(self.system))
        if int(self.dimension) != self.dimension or self.dimension < 2:
            raise InvalidStateError(
                f"dimension D ≥ 2 violated: D = {self.dimension}"
            )
        object.__setattr__(self, "dimension", int(self.dimension))
        if not self.mu and self.dimension > 2:
            object.__setattr__(self, "mu", (0,) * (self.dimension - 2))
        object.__setattr__(self, "mu", tuple(int(m) for m in self.mu))
        self._check()

    def _check(self) -> None:
        if not (math.isfinite(self.strength) and self.strength > 0):
            name = "Z" if self.system is SystemKind.HYDROGENIC else "lambda"
            raise InvalidStateError(f"{name} > 0 violated: {name} = {self.strength}")

        if self.system is SystemKind.HYDROGENIC:
            if self.n < 1:
                raise InvalidStateError(f"n ≥ 1 violated: n = {self.n}")
            if self.l < 0:
                raise InvalidStateError(f"l ≥ 0 violated: l = {self.l}")
            if self.l > self.n - 1:
                raise InvalidStateError(
                    f"l ≤ n−1 violated: n = {self.n}, l = {self.l}"
                )
        else:
            if self.n < 0:
                raise InvalidStateError(f"n ≥ 0 violated: n = {self.n}")
            if self.l < 0:
                raise InvalidStateError(f"l ≥ 0 violated: l = {self.l}")

        if len(self.mu) != self.dimension - 2:
            raise InvalidStateError(
                f"mu must hold D−2 = {self.dimension - 2} entries, got {len(self.mu)}"
            )
        chain = (self.l, *self.mu)
        if any(upper < lower for upper, lower in zip(chain, chain[1:], strict=False)):
            raise InvalidStateError(
                f"hyperquantum ordering violated: l = {self.l}, mu = {self.mu}"
            )
        if self.mu and self.mu[-1] < 0:
            raise InvalidStateError(f"|m| ≥ 0 violated: mu = {self.mu}")

    @classmethod
    def from_m(
        cls,
        system: SystemKind | str,
        dimension: int,
        n: int,
        l: int,
        m: int = 0,
        strength: float = 1.0,
    ) -> "QuantumState":
        """Build a state whose whole μ chain equals |m|"""
        if dimension == 2 and abs(m) != l:
            raise InvalidStateError(
                f"D = 2 requires |m| = l: l = {l}, m = {m}"
            )
        return cls(
            system=SystemKind(system),
            dimension=dimension,
            n=n,
            l=l,
            mu=(abs(m),) * (dimension - 2),
            strength=strength,
        )

    @property
    def is_hydrogenic(self) -> bool:
        return self.system is SystemKind.HYDROGENIC

    @property
    def m(self) -> int:
        """|m| = μ_{D-1}; in two dimensions the chain is empty and |m| = l"""
        return self.mu[-1] if self.mu else self.l

    @property
    def eta(self) -> float:
        """Grand quantum number: n+(D-3)/2 (hydrogenic), 2n+l+(D-3)/2 (oscillator)"""
        if self.is_hydrogenic:
            return self.n + 0.5 * (self.dimension - 3)
        return 2 * self.n + self.l + 0.5 * (self.dimension - 3)

    @property
    def big_l(self) -> float:
        """L = l + (D-3)/2"""
        return self.l + 0.5 * (self.dimension - 3)

    @property
    def length_scale(self) -> float:
        """Λ = η/(2Z) for hydrogenic states, λ^{-1/2} for oscillators"""
        if self.is_hydrogenic:
            return self.eta / (2.0 * self.strength)
        return self.strength**-0.5

    @property
    def radial_degree(self) -> int:
        """Degree of the radial Laguerre/Gegenbauer polynomial"""
        return self.n - self.l - 1 if self.is_hydrogenic else self.n

    def energy(self) -> float:
        """Bound-state energy in atomic units"""
        if self.is_hydrogenic:
            return -(self.strength**2) / (2.0 * self.eta**2)
        return self.strength * (2 * self.n + self.l + 0.5 * self.dimension)

    def with_dimension(self, dimension: int) -> "QuantumState":
        """The same labels in another dimension

        The μ chain keeps its leading entries and is extended or cut with its
        last value |m|.
        """
        if dimension == 2:
            return replace(self, dimension=2, mu=())
        size = dimension - 2
        if self.mu:
            chain = self.mu[:size]
            chain = chain + (self.mu[-1],) * (size - len(chain))
            chain = chain[:-1] + (self.mu[-1],)
        else:
            chain = (self.l,) * size
        return replace(self, dimension=dimension, mu=chain)

    def with_strength(self, strength: float) -> "QuantumState":
        return replace(self, strength=strength)

    def label(self) -> str:
        """Short human-readable label"""
        strength_name = "Z" if self.is_hydrogenic else "lambda"
        mu = ",".join(str(m) for m in self.mu) or "-"
        return (
            f"{self.system.value}(D={self.dimension}, n={self.n}, l={self.l}, "
            f"mu=({mu}), {strength_name}={self.strength:g})"
        )


def validate(state: QuantumState) -> QuantumState:
    """Re-check every invariant of a state and return it unchanged"""
    state._check()
    return state
