"""Measure registry shared by the command handlers and the asymptotic scans"""

from .registry import MEASURES, MeasureParams, MeasureSpec, evaluate_measure, get_measure

__all__ = ["MEASURES", "MeasureParams", "MeasureSpec", "evaluate_measure", "get_measure"]
