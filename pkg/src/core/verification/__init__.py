"""Verification suites over state matrices"""

from .suites import MATRICES, SUITES, PropertyCheck, SuiteReport, run_suite, state_matrix

__all__ = ["MATRICES", "SUITES", "PropertyCheck", "SuiteReport", "run_suite", "state_matrix"]
