"""Pseudoclassical predictions and convergence scans"""

from .convergence import ScanPoint, ScanResult, convergence_scan, fit_rate, residual
from .predictions import (
    CATALOGUE,
    AsymptoticPrediction,
    PredictionParams,
    ResidualKind,
    build_prediction,
    catalogue_entry,
    lmc_renyi_limit,
    log_q_tilde_power,
    predict,
)

__all__ = [
    "CATALOGUE",
    "AsymptoticPrediction",
    "PredictionParams",
    "ResidualKind",
    "ScanPoint",
    "ScanResult",
    "build_prediction",
    "catalogue_entry",
    "convergence_scan",
    "fit_rate",
    "lmc_renyi_limit",
    "log_q_tilde_power",
    "predict",
]
