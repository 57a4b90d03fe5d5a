"""Entropic and Fisher information measures and uncertainty relations"""

from .entropies import (
    EntropyDecomposition,
    disequilibrium,
    entropic_moment,
    renyi,
    shannon,
    tsallis,
)
from .fisher import fisher_closed, fisher_direct, fisher_via_moments
from .uncertainty import UncertaintyReport, conjugate_order, uncertainty_report

__all__ = [
    "EntropyDecomposition",
    "UncertaintyReport",
    "conjugate_order",
    "disequilibrium",
    "entropic_moment",
    "fisher_closed",
    "fisher_direct",
    "fisher_via_moments",
    "renyi",
    "shannon",
    "tsallis",
    "uncertainty_report",
]
