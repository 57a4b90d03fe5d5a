"""
Gaussian quadrature rules for Laguerre-type and Jacobi-type weights

Nodes are the eigenvalues of the symmetric tridiagonal Jacobi matrix built
from the monic recurrence coefficients, polished by one Newton step on the
orthonormal recurrence. Weights come from the Christoffel-Darboux identity
and are stored as logarithms, since Γ(α+1) overflows doubles for α ≳ 170.
"""

import math
from dataclasses import dataclass, field

import numpy as np
from numpy.typing import NDArray
from scipy.linalg import LinAlgError, eigvalsh_tridiagonal
from scipy.special import logsumexp

from src.core.specfun.polynomials import (
    PolyFamily,
    log_mass,
    recurrence_coefficients,
    scaled_recurrence,
    validate_parameters,
)
from src.core.specfun.rule_cache import RuleCache
from src.exceptions import DomainError, QuadratureError


@dataclass(frozen=True)
class QuadratureRule:
    """N-point Gaussian rule for ∫ w(x) f(x) dx ≈ Σ w_i f(x_i)"""

    family: PolyFamily
    params: tuple[float, ...]
    order: int
    nodes: NDArray[np.float64] = field(repr=False)
    log_weights: NDArray[np.float64] = field(repr=False)

    def __post_init__(self) -> None:
        self.nodes.setflags(write=False)
        self.log_weights.setflags(write=False)

    @property
    def weights(self) -> NDArray[np.float64]:
        """Linear weights; may overflow for very large Laguerre parameters"""
        with np.errstate(over="ignore"):
            return np.exp(self.log_weights)

    @property
    def log_total_mass(self) -> float:
        return float(logsumexp(self.log_weights))

    def integrate(self, values: NDArray[np.float64]) -> float:
        """Σ w_i f(x_i) for function values at the nodes"""
        return float(np.dot(self.weights, values))

    def log_weight_function(self, x: NDArray[np.float64]) -> NDArray[np.float64]:
        """ln w(x) of the rule's own weight at points x"""
        if self.family is PolyFamily.LAGUERRE:
            alpha = self.params[0]
            with np.errstate(divide="ignore"):
                return alpha * np.log(x) - x
        a, b = self.params
        with np.errstate(divide="ignore"):
            return a * np.log1p(-x) + b * np.log1p(x)


def _newton_polish(
    nodes: NDArray[np.float64],
    a: NDArray[np.float64],
    b: NDArray[np.float64],
    order: int,
) -> NDArray[np.float64]:
    """One Newton step on p̃_N, kept only where it stays between neighbours"""
    p, _, d, _ = scaled_recurrence(a, b, order, nodes)
    with np.errstate(divide="ignore", invalid="ignore"):
        step = p / d

    gaps = np.full_like(nodes, np.inf)
    if order > 1:
        spacing = np.diff(nodes)
        gaps[:-1] = spacing
        gaps[1:] = np.minimum(gaps[1:], spacing)
    accept = np.isfinite(step) & (np.abs(step) < 0.25 * gaps)
    return np.where(accept, nodes - step, nodes)


def _inside_domain(family: PolyFamily, nodes: NDArray[np.float64]) -> bool:
    if family is PolyFamily.LAGUERRE:
        return bool(np.all(nodes > 0.0))
    return bool(np.all((nodes > -1.0) & (nodes < 1.0)))


def build_gauss_rule(
    family: PolyFamily, params: tuple[float, ...], order: int
) -> QuadratureRule:
    """Construct an N-point rule without consulting the cache"""
    if order < 1:
        raise DomainError(f"quadrature order must be at least 1, got {order}")
    params = tuple(float(p) for p in params)
    validate_parameters(family, params)

    a, b = recurrence_coefficients(family, params, order + 1)
    if order == 1:
        nodes = np.array([a[0]], dtype=np.float64)
    else:
        try:
            nodes = eigvalsh_tridiagonal(a[:order], np.sqrt(b[1:order]))
        except (LinAlgError, ValueError) as e:
            raise QuadratureError(
                f"tridiagonal eigensolver failed for {family.value}{params} N={order}: {e}"
            ) from e
        nodes = np.sort(np.asarray(nodes, dtype=np.float64))

    if not _inside_domain(family, nodes):
        raise QuadratureError(
            f"eigenvalues left the {family.value} domain for parameters {params}, N={order}"
        )

    polished = _newton_polish(nodes, a, b, order)
    if _inside_domain(family, polished) and bool(np.all(np.diff(polished) > 0)):
        nodes = polished

    # Christoffel-Darboux: 1/w_i = μ0^{-1} sqrt(b_N) q_N'(x_i) q_{N-1}(x_i)
    _, p_prev, d, log_scale = scaled_recurrence(a, b, order, nodes)
    with np.errstate(divide="ignore"):
        log_inverse = (
            0.5 * math.log(b[order]) + np.log(np.abs(p_prev * d)) + 2.0 * log_scale
        )
    mu0 = log_mass(family, params)
    log_weights = mu0 - log_inverse
    if not np.all(np.isfinite(log_weights)):
        raise QuadratureError(
            f"non-finite weights for {family.value}{params}, N={order}"
        )
    log_weights = log_weights + (mu0 - float(logsumexp(log_weights)))

    return QuadratureRule(
        family=family,
        params=params,
        order=order,
        nodes=nodes,
        log_weights=np.asarray(log_weights, dtype=np.float64),
    )


_rule_cache: RuleCache[QuadratureRule] | None = None


def get_rule_cache() -> RuleCache[QuadratureRule]:
    """Get the process-wide rule cache"""
    global _rule_cache
    if _rule_cache is None:
        _rule_cache = RuleCache()
    return _rule_cache


def gauss_rule(
    family: PolyFamily | str, params: tuple[float, ...], order: int
) -> QuadratureRule:
    """
    Gaussian rule for the given weight family

    Args:
        family: "laguerre" (weight x^α e^{-x}) or "jacobi" (weight (1-y)^a (1+y)^b)
        params: (α,) or (a, b)
        order: number of nodes N ≥ 1

    Returns:
        Cached, immutable QuadratureRule
    """
    family = PolyFamily(family)
    key = (family.value, tuple(float(p) for p in params), int(order))
    return get_rule_cache().get_or_build(
        key, lambda: build_gauss_rule(family, key[1], key[2])
    )


def polynomial_zeros(
    family: PolyFamily, params: tuple[float, ...], degree: int
) -> NDArray[np.float64]:
    """Zeros of p̃_degree, i.e. the nodes of the degree-point rule"""
    if degree == 0:
        return np.empty(0, dtype=np.float64)
    return gauss_rule(family, params, degree).nodes
