"""Log-domain integration engine for factored densities"""

from .factor_integrator import (
    NodeSet,
    QuadratureResult,
    WeightedIntegrand,
    integrate,
)
from .functionals import (
    entropic_integrand,
    log_entropic_moment,
    moment_integral,
    probability_integrand,
    shannon_integral,
)

__all__ = [
    "NodeSet",
    "QuadratureResult",
    "WeightedIntegrand",
    "entropic_integrand",
    "integrate",
    "log_entropic_moment",
    "moment_integral",
    "probability_integrand",
    "shannon_integral",
]
