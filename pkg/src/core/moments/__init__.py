"""Radial expectation values, variances and Heisenberg-like products"""

from .models import MeasureValue, Method
from .radial import (
    MomentCrossCheck,
    closed_moment,
    heisenberg_product,
    moment_cross_check,
    moment_range,
    radial_moment,
    variance,
)

__all__ = [
    "MeasureValue",
    "Method",
    "MomentCrossCheck",
    "closed_moment",
    "heisenberg_product",
    "moment_cross_check",
    "moment_range",
    "radial_moment",
    "variance",
]
