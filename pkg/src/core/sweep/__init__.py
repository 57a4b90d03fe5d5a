"""Parameter sweeps over D, q or alpha"""

from .models import RangeSpec, StateTemplate, SweepSpec, load_sweep_file, sweep_spec_from_mapping
from .runner import SweepOutcome, measure_rows, residual_conventions, run_sweep

__all__ = [
    "RangeSpec",
    "StateTemplate",
    "SweepOutcome",
    "SweepSpec",
    "load_sweep_file",
    "measure_rows",
    "residual_conventions",
    "run_sweep",
    "sweep_spec_from_mapping",
]
