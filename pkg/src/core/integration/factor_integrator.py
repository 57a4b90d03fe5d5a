"""
Log-domain Gaussian integration of weight × |orthonormal polynomial|^{2s} × h

Integrands have the form

    exp(log_const) · w(u) · |p̃_k(u)|^{2s} · h(u)

with w(u) = u^a e^{-rate·u} on [0, ∞) or (1-u)^a (1+u)^b on [-1, 1], and h an
optional signed factor. When |p̃|^{2s} h is a polynomial a single rule with
the weight absorbed is exact. Otherwise (non-even 2s, logarithmic h) the
domain is split at the zeros of p̃_k and each piece gets a Gauss-Jacobi or
Gauss-Laguerre rule whose endpoint exponents match the integrand, so every
piece converges at the rate of a smooth integrand.

Every piece is evaluated on a node-doubling ladder until the relative change
falls below Settings.quadrature_rtol.
"""

import math
from collections.abc import Callable
from dataclasses import dataclass, replace

import numpy as np
from numpy.typing import NDArray
from loguru import logger

from src.config import get_settings
from src.core.specfun.log_value import LogValue, log_add_signed, signed_log_sum
from src.core.specfun.polynomials import PolyFamily, log_abs_polynomial
from src.core.specfun.quadrature import gauss_rule, polynomial_zeros
from src.exceptions import DivergentIntegralError, NonConvergenceError


@dataclass(frozen=True)
class WeightedIntegrand:
    """exp(log_const) · w(u) · |p̃_degree(u)|^{2·power} over the family's domain"""

    family: PolyFamily
    exponents: tuple[float, ...]
    poly_params: tuple[float, ...]
    degree: int
    power: float = 1.0
    rate: float = 1.0
    log_const: float = 0.0

    def check_integrable(self) -> None:
        if any(not e > -1.0 for e in self.exponents):
            raise DivergentIntegralError(
                f"endpoint exponent(s) {self.exponents} must exceed -1"
            )
        if self.family is PolyFamily.LAGUERRE and not self.rate > 0.0:
            raise DivergentIntegralError(
                f"exponential rate {self.rate} must be positive"
            )
        if self.power < 0.0:
            raise DivergentIntegralError(
                f"polynomial power {self.power} must be non-negative"
            )

    @property
    def is_polynomial(self) -> bool:
        """|p̃|^{2·power} is itself a polynomial"""
        return self.degree == 0 or float(self.power).is_integer()

    def shifted(self, shift: tuple[float, ...]) -> "WeightedIntegrand":
        return replace(
            self,
            exponents=tuple(e + s for e, s in zip(self.exponents, shift, strict=True)),
        )


@dataclass(frozen=True)
class NodeSet:
    """Evaluation points with accurately computed endpoint logarithms

    log_first is ln u (Laguerre) or ln(1-u) (Jacobi); log_second is ln(1+u)
    (Jacobi) and zero for Laguerre.
    """

    u: NDArray[np.float64]
    log_first: NDArray[np.float64]
    log_second: NDArray[np.float64]
    log_poly: NDArray[np.float64]


SignedFactor = Callable[[NodeSet], NDArray[np.float64]]


@dataclass(frozen=True)
class QuadratureResult:
    """Integral in log form with ladder diagnostics"""

    log_magnitude: float
    sign: int
    log_abs_integral: float
    relative_change: float
    converged: bool
    nodes_used: int

    @property
    def value(self) -> float:
        return self.as_log_value().to_float()

    def as_log_value(self) -> LogValue:
        if self.sign == 0:
            return LogValue.zero()
        return LogValue(self.log_magnitude, self.sign)

    @property
    def abs_error(self) -> float:
        """|I_N - I_{N/2}| in linear scale; may overflow to inf"""
        if not math.isfinite(self.log_abs_integral):
            return 0.0
        log_error = self.log_abs_integral + math.log(max(self.relative_change, 1e-300))
        return math.exp(log_error) if log_error < 709.0 else math.inf


@dataclass(frozen=True)
class _Piece:
    family: PolyFamily  # rule family
    params: tuple[float, ...]  # rule parameters
    lower: float
    upper: float  # inf for the Laguerre tail
    lower_is_domain_end: bool
    upper_is_domain_end: bool


def _pieces(integrand: WeightedIntegrand, split: bool) -> list[_Piece]:
    """Rule pieces covering the domain"""
    laguerre = integrand.family is PolyFamily.LAGUERRE
    if not split:
        return [
            _Piece(
                family=integrand.family,
                params=integrand.exponents,
                lower=0.0 if laguerre else -1.0,
                upper=math.inf if laguerre else 1.0,
                lower_is_domain_end=True,
                upper_is_domain_end=True,
            )
        ]

    zero_power = 2.0 * integrand.power
    zeros = polynomial_zeros(integrand.family, integrand.poly_params, integrand.degree)
    start = 0.0 if laguerre else -1.0
    start_exponent = integrand.exponents[0] if laguerre else integrand.exponents[1]
    breaks = [start, *zeros.tolist()]
    pieces = []
    for i in range(len(breaks) - 1):
        lo_exponent = start_exponent if i == 0 else zero_power
        pieces.append(
            _Piece(
                family=PolyFamily.JACOBI,
                params=(zero_power, lo_exponent),
                lower=breaks[i],
                upper=breaks[i + 1],
                lower_is_domain_end=i == 0,
                upper_is_domain_end=False,
            )
        )
    if laguerre:
        pieces.append(
            _Piece(
                family=PolyFamily.LAGUERRE,
                params=(zero_power,),
                lower=breaks[-1],
                upper=math.inf,
                lower_is_domain_end=False,
                upper_is_domain_end=True,
            )
        )
    else:
        pieces.append(
            _Piece(
                family=PolyFamily.JACOBI,
                params=(integrand.exponents[0], zero_power),
                lower=breaks[-1],
                upper=1.0,
                lower_is_domain_end=False,
                upper_is_domain_end=True,
            )
        )
    return pieces


def _piece_terms(
    integrand: WeightedIntegrand,
    piece: _Piece,
    order: int,
    h: SignedFactor | None,
    single: bool,
) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    """Log-magnitudes and signs of the weighted integrand values at the piece nodes"""
    rule = gauss_rule(piece.family, piece.params, order)
    t = np.asarray(rule.nodes)
    laguerre = integrand.family is PolyFamily.LAGUERRE
    rate = integrand.rate if laguerre else 1.0

    if laguerre and math.isinf(piece.upper):
        # u = lower + τ/rate, shape τ^c e^{-τ}
        u = piece.lower + t / rate
        if single:
            log_first = np.log(t) - math.log(rate)
        else:
            log_first = np.log(u)
        log_second = np.zeros_like(u)
        log_jacobian = -math.log(rate)
        log_shape = piece.params[0] * np.log(t) - t
    else:
        half = 0.5 * (piece.upper - piece.lower)
        u = piece.lower + half * (1.0 + t)
        log_up = math.log(half) + np.log1p(-t)  # ln(upper - u)
        log_down = math.log(half) + np.log1p(t)  # ln(u - lower)
        if laguerre:
            log_first = log_down if piece.lower == 0.0 else np.log(u)
            log_second = np.zeros_like(u)
        else:
            log_first = log_up if piece.upper_is_domain_end else np.log1p(-u)
            log_second = log_down if piece.lower_is_domain_end else np.log1p(u)
        log_jacobian = math.log(half)
        log_shape = piece.params[0] * np.log1p(-t) + piece.params[1] * np.log1p(t)

    if integrand.power == 0.0:
        log_poly = np.zeros_like(u)
    else:
        log_poly = log_abs_polynomial(
            integrand.family, integrand.poly_params, integrand.degree, u
        )

    log_f = integrand.log_const + 2.0 * integrand.power * log_poly
    log_f = log_f + _power(integrand.exponents[0], log_first)
    if laguerre:
        log_f = log_f - integrand.rate * u
    else:
        log_f = log_f + _power(integrand.exponents[1], log_second)

    with np.errstate(invalid="ignore"):
        logs = rule.log_weights + log_f - log_shape + log_jacobian
    signs = np.ones_like(logs)
    dead = ~np.isfinite(logs)

    if h is not None:
        nodes = NodeSet(u=u, log_first=log_first, log_second=log_second, log_poly=log_poly)
        factor = np.asarray(h(nodes), dtype=np.float64)
        with np.errstate(divide="ignore"):
            logs = logs + np.log(np.abs(factor))
        signs = np.sign(factor)
        dead |= ~np.isfinite(factor)

    signs = np.where(dead, 0.0, signs)
    logs = np.where(signs == 0.0, -np.inf, logs)
    return logs, signs


def _power(exponent: float, log_base: NDArray[np.float64]) -> NDArray[np.float64]:
    if exponent == 0.0:
        return np.zeros_like(log_base)
    return exponent * log_base


def _sum_pieces(
    integrand: WeightedIntegrand,
    pieces: list[_Piece],
    order: int,
    h: SignedFactor | None,
    single: bool,
    cutoff: float,
) -> tuple[float, int, float]:
    all_logs = []
    all_signs = []
    for piece in pieces:
        logs, signs = _piece_terms(integrand, piece, order, h, single)
        all_logs.append(logs)
        all_signs.append(signs)
    logs = np.concatenate(all_logs)
    signs = np.concatenate(all_signs)

    live = signs != 0
    if np.any(live):
        top = float(np.max(logs[live]))
        signs = np.where(logs < top + cutoff, 0.0, signs)
    return signed_log_sum(logs, signs)


def integrate(
    integrand: WeightedIntegrand,
    h: SignedFactor | None = None,
    *,
    rtol: float | None = None,
    min_nodes: int | None = None,
    max_nodes: int | None = None,
    split: bool | None = None,
    strict: bool = False,
) -> QuadratureResult:
    """
    Integrate on a node-doubling ladder

    Args:
        integrand: weight, polynomial and constant of the integrand
        h: optional signed factor evaluated at the nodes
        rtol: relative-change tolerance (Settings.quadrature_rtol)
        min_nodes: first ladder step (Settings.quadrature_min_nodes)
        max_nodes: last ladder step (Settings.quadrature_max_nodes)
        split: force (True) or forbid (False) splitting at polynomial zeros;
            by default only non-polynomial integrands are split
        strict: raise NonConvergenceError instead of flagging

    Returns:
        QuadratureResult; converged is False when the ladder ran out
    """
    settings = get_settings()
    rtol = settings.quadrature_rtol if rtol is None else rtol
    min_nodes = settings.quadrature_min_nodes if min_nodes is None else min_nodes
    max_nodes = settings.quadrature_max_nodes if max_nodes is None else max_nodes
    integrand.check_integrable()

    single = integrand.degree == 0 or (h is None and integrand.is_polynomial)
    if split is not None and integrand.degree > 0:
        single = not split
    pieces = _pieces(integrand, split=not single)
    order = min_nodes
    if single and integrand.is_polynomial:
        order = max(order, int(math.ceil(integrand.power * integrand.degree)) + 1)
    order = min(order, max_nodes)

    previous: tuple[float, int, float] | None = None
    current = (-math.inf, 0, -math.inf)
    change = math.inf
    used = 0
    while True:
        current = _sum_pieces(
            integrand, pieces, order, h, single, settings.log_zero_cutoff
        )
        used = order * len(pieces)
        if previous is not None:
            change = _relative_change(current, previous)
            logger.debug(
                f"{integrand.family.value}{integrand.exponents} k={integrand.degree} "
                f"s={integrand.power:g} N={order}: change {change:.3e}"
            )
            if change <= rtol:
                break
        if order * 2 > max_nodes:
            break
        previous = current
        order *= 2

    converged = change <= rtol
    if not converged:
        message = (
            f"quadrature stalled at N={order} per piece "
            f"({len(pieces)} pieces), relative change {change:.3e}"
        )
        if strict:
            raise NonConvergenceError(message)
        logger.warning(message)

    log_value, sign, log_abs = current
    return QuadratureResult(
        log_magnitude=log_value,
        sign=sign,
        log_abs_integral=log_abs,
        relative_change=change,
        converged=converged,
        nodes_used=used,
    )


def _relative_change(
    current: tuple[float, int, float], previous: tuple[float, int, float]
) -> float:
    log_now, sign_now, log_abs = current
    log_before, sign_before, _ = previous
    if sign_now == 0 and sign_before == 0:
        return 0.0
    log_diff, sign_diff = log_add_signed(log_now, sign_now, log_before, -sign_before)
    if float(sign_diff) == 0.0:
        return 0.0
    return math.exp(min(float(log_diff) - log_abs, 700.0))
