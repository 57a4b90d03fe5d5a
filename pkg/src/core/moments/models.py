"""
Result models shared by the moment and information-measure layers
"""

import math
from dataclasses import dataclass
from enum import Enum

from src.core.integration.factor_integrator import QuadratureResult


class Method(str, Enum):
    """How a value was obtained"""

    CLOSED_FORM = "closed_form"
    QUADRATURE = "quadrature"


@dataclass(frozen=True)
class MeasureValue:
    """Numeric result with its provenance and convergence diagnostics"""

    value: float
    method: Method
    abs_error_estimate: float = 0.0
    converged: bool = True
    nodes_used: int = 0

    @classmethod
    def closed(cls, value: float) -> "MeasureValue":
        return cls(value=float(value), method=Method.CLOSED_FORM)

    @classmethod
    def from_quadrature(cls, result: QuadratureResult) -> "MeasureValue":
        return cls(
            value=result.value,
            method=Method.QUADRATURE,
            abs_error_estimate=result.abs_error,
            converged=result.converged,
            nodes_used=result.nodes_used,
        )

    def combine(self, other: "MeasureValue", value: float) -> "MeasureValue":
        """Result derived from two inputs; the weaker provenance wins"""
        method = (
            Method.CLOSED_FORM
            if self.method is Method.CLOSED_FORM and other.method is Method.CLOSED_FORM
            else Method.QUADRATURE
        )
        return MeasureValue(
            value=float(value),
            method=method,
            abs_error_estimate=self.abs_error_estimate + other.abs_error_estimate,
            converged=self.converged and other.converged,
            nodes_used=self.nodes_used + other.nodes_used,
        )

    def times(self, other: "MeasureValue") -> "MeasureValue":
        """Product with first-order error propagation"""
        product = self.combine(other, self.value * other.value)
        error = (
            abs(self.value) * other.abs_error_estimate
            + abs(other.value) * self.abs_error_estimate
        )
        return MeasureValue(
            value=product.value,
            method=product.method,
            abs_error_estimate=error,
            converged=product.converged,
            nodes_used=product.nodes_used,
        )

    @property
    def relative_error(self) -> float:
        if self.value == 0.0:
            return 0.0 if self.abs_error_estimate == 0.0 else math.inf
        return self.abs_error_estimate / abs(self.value)
