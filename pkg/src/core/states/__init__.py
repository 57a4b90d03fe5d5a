"""Quantum states and their factored probability densities"""

from .angular import AngularFactor, GegenbauerFactor, angular_factor, full_density_at
from .densities import (
    DensityFactor,
    RadialDensity,
    log_radial_density_at,
    radial_density,
    radial_density_at,
)
from .models import QuantumState, Space, SystemKind, validate

__all__ = [
    "AngularFactor",
    "DensityFactor",
    "GegenbauerFactor",
    "QuantumState",
    "RadialDensity",
    "Space",
    "SystemKind",
    "angular_factor",
    "full_density_at",
    "log_radial_density_at",
    "radial_density",
    "radial_density_at",
    "validate",
]
