"""
Row and document models for CSV/JSON output

The column order of OutputRow is the CSV header; any change to it bumps
SCHEMA_VERSION.
"""

from pydantic import BaseModel, ConfigDict, Field

from src.core.moments.models import MeasureValue
from src.core.states.models import QuantumState, Space

SCHEMA_VERSION = 1

COMBINED_SPACE = "combined"


class OutputRow(BaseModel):
    """One measure of one state in one space"""

    model_config = ConfigDict(frozen=True, ser_json_inf_nan="strings")

    system: str
    dimension: int
    n: int
    l: int
    mu: str
    strength: float
    measure: str
    space: str
    alpha: float | None = None
    beta: float | None = None
    q: float | None = None
    p: float | None = None
    method: str
    value: float
    error_estimate: float = 0.0
    converged: bool = True
    predicted: float | None = None
    residual: float | None = None
    cross_check: float | None = None
    cross_check_difference: float | None = None

    @classmethod
    def build(
        cls,
        state: QuantumState,
        measure_id: str,
        space: Space | None,
        orders: dict[str, float],
        value: MeasureValue,
        **extra: float | None,
    ) -> "OutputRow":
        return cls(
            system=state.system.value,
            dimension=state.dimension,
            n=state.n,
            l=state.l,
            mu=";".join(str(m) for m in state.mu),
            strength=state.strength,
            measure=measure_id,
            space=space.value if space is not None else COMBINED_SPACE,
            method=value.method.value,
            value=value.value,
            error_estimate=value.abs_error_estimate,
            converged=value.converged,
            **orders,
            **extra,
        )


CSV_COLUMNS: tuple[str, ...] = tuple(OutputRow.model_fields)


class OutputMeta(BaseModel):
    schema_version: int = SCHEMA_VERSION
    command: str = ""
    timestamp: str | None = None
    residual: dict[str, str] = Field(default_factory=dict)


class OutputDocument(BaseModel):
    """Top-level JSON object {meta, rows}"""

    model_config = ConfigDict(ser_json_inf_nan="strings")

    meta: OutputMeta
    rows: list[OutputRow]
