"""Statistical complexity measures"""

from .measures import (
    ComplexityKind,
    ComplexityValue,
    cramer_rao,
    fisher_shannon,
    lmc,
    lmc_direct,
    lmc_renyi,
    space_symmetry,
)

__all__ = [
    "ComplexityKind",
    "ComplexityValue",
    "cramer_rao",
    "fisher_shannon",
    "lmc",
    "lmc_direct",
    "lmc_renyi",
    "space_symmetry",
]
