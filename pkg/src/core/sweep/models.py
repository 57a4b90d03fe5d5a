"""
Sweep specifications

A sweep varies one of D, q or alpha over an explicit list or a range and
evaluates a list of measures for a fixed state template at every point.
Specifications come from CLI flags, from a flat `key = value` manifest or
from both (flags win).
"""

from pathlib import Path
from typing import Any, Literal

import numpy as np
from dotenv import dotenv_values
from pydantic import BaseModel, Field, field_validator, model_validator

from src.core.measures.registry import MEASURES
from src.core.states.models import QuantumState, Space, SystemKind
from src.exceptions import DomainError, SpreadError
from src.utils import parse_int_list, parse_number_list

SWEEP_VARIABLES = ("D", "q", "alpha")

# manifest key -> SweepSpec field
_MANIFEST_KEYS = {
    "system": "system",
    "z": "strength",
    "lambda": "strength",
    "strength": "strength",
    "d": "dimension",
    "dimension": "dimension",
    "n": "n",
    "l": "l",
    "m": "m",
    "mu": "mu",
    "space": "spaces",
    "spaces": "spaces",
    "measure": "measures",
    "measures": "measures",
    "variable": "variable",
    "values": "values",
    "start": "start",
    "stop": "stop",
    "count": "count",
    "scale": "scale",
    "alpha": "alpha",
    "beta": "beta",
    "q": "q",
    "p": "p",
    "method": "method",
    "predict": "predict",
    "keep_going": "keep_going",
}


class StateTemplate(BaseModel):
    """Labels of the state carried to every sweep point"""

    system: SystemKind
    dimension: int = Field(default=3, ge=2)
    n: int
    l: int = 0
    m: int | None = None
    mu: tuple[int, ...] | None = None
    strength: float = Field(default=1.0, gt=0.0)

    @field_validator("mu", mode="before")
    @classmethod
    def _split_mu(cls, value: Any) -> Any:
        if isinstance(value, str):
            return tuple(parse_int_list(value)) if value.strip() else None
        return value

    def to_state(self, dimension: int | None = None) -> QuantumState:
        dimension = self.dimension if dimension is None else dimension
        if self.mu is not None:
            state = QuantumState(
                system=self.system,
                dimension=self.dimension,
                n=self.n,
                l=self.l,
                mu=self.mu,
                strength=self.strength,
            )
            return state if dimension == self.dimension else state.with_dimension(dimension)
        return QuantumState.from_m(
            self.system, dimension, self.n, self.l, self.m or 0, self.strength
        )


class RangeSpec(BaseModel):
    """start..stop with count points on a linear or logarithmic grid"""

    start: float
    stop: float
    count: int = Field(ge=2)
    scale: Literal["linear", "log"] = "linear"

    def values(self) -> list[float]:
        if self.scale == "log":
            if self.start <= 0 or self.stop <= 0:
                raise DomainError("a log-scaled range needs positive start and stop")
            return [float(v) for v in np.geomspace(self.start, self.stop, self.count)]
        return [float(v) for v in np.linspace(self.start, self.stop, self.count)]


class SweepSpec(BaseModel):
    """Validated sweep: variable, values, state template and measures"""

    variable: Literal["D", "q", "alpha"]
    values: list[float]
    template: StateTemplate
    measures: list[str] = Field(min_length=1)
    spaces: list[Space] = Field(default_factory=lambda: [Space.POSITION])
    alpha: float | None = None
    beta: float | None = None
    q: float | None = None
    p: float | None = None
    method: str = "auto"
    predict: bool = False
    keep_going: bool = False

    @field_validator("measures")
    @classmethod
    def _known_measures(cls, measures: list[str]) -> list[str]:
        unknown = [m for m in measures if m not in MEASURES]
        if unknown:
            raise ValueError(f"unknown measures {unknown}")
        return measures

    @model_validator(mode="after")
    def _check_values(self) -> "SweepSpec":
        if not self.values:
            raise ValueError("sweep values must not be empty")
        if any(b <= a for a, b in zip(self.values, self.values[1:], strict=False)):
            raise ValueError(f"sweep values must be strictly increasing, got {self.values}")
        if self.variable == "D":
            rounded = [round(v) for v in self.values]
            if any(abs(v - r) > 1e-9 for v, r in zip(self.values, rounded, strict=True)):
                raise ValueError(f"dimension sweeps need integer values, got {self.values}")
            if min(rounded) < 2:
                raise ValueError("dimension sweeps need D ≥ 2")
            self.values = [float(r) for r in rounded]
        return self

    def states(self) -> list[QuantumState]:
        """One state per sweep point"""
        if self.variable == "D":
            return [self.template.to_state(int(v)) for v in self.values]
        state = self.template.to_state()
        return [state] * len(self.values)

    def orders_at(self, index: int) -> dict[str, float | None]:
        orders: dict[str, float | None] = {
            "alpha": self.alpha,
            "beta": self.beta,
            "q": self.q,
            "p": self.p,
        }
        if self.variable in ("q", "alpha"):
            orders[self.variable] = self.values[index]
        return orders


def _split(value: Any) -> Any:
    if isinstance(value, str):
        return [item.strip() for item in value.split(",") if item.strip()]
    return value


def sweep_spec_from_mapping(raw: dict[str, Any]) -> SweepSpec:
    """
    Build a SweepSpec from flat keys

    Keys follow the CLI flags (system, Z/lambda, D, n, l, m, mu, space,
    measure, variable, values or start/stop/count/scale, q, alpha, beta, p,
    method, predict, keep_going). Values may be strings as read from a
    manifest.
    """
    try:
        return _build_spec(raw)
    except SpreadError:
        raise
    except ValueError as e:
        raise DomainError(f"invalid sweep specification: {e}") from e


def _build_spec(raw: dict[str, Any]) -> SweepSpec:
    fields: dict[str, Any] = {}
    for key, value in raw.items():
        if value is None:
            continue
        target = _MANIFEST_KEYS.get(key.strip().lower())
        if target is None:
            raise DomainError(f"unknown sweep key {key!r}")
        fields[target] = value

    spaces = _split(fields.pop("spaces", ["position"]))
    if "both" in spaces:
        spaces = ["position", "momentum"]

    if "values" in fields:
        values = parse_number_list(fields.pop("values"))
        for key in ("start", "stop", "count", "scale"):
            fields.pop(key, None)
    elif {"start", "stop", "count"} <= fields.keys():
        values = RangeSpec(
            start=fields.pop("start"),
            stop=fields.pop("stop"),
            count=fields.pop("count"),
            scale=fields.pop("scale", "linear"),
        ).values()
        if fields.get("variable") == "D":
            # integer grid for dimension ranges; log spacing may repeat small D
            values = sorted({float(round(v)) for v in values})
    else:
        raise DomainError("a sweep needs values or start, stop and count")

    template_keys = ("system", "dimension", "n", "l", "m", "mu", "strength")
    template = {k: fields.pop(k) for k in template_keys if k in fields}
    return SweepSpec(
        values=values,
        template=StateTemplate(**template),
        measures=_split(fields.pop("measures", [])),
        spaces=spaces,
        **fields,
    )


def load_sweep_file(path: str | Path) -> dict[str, str | None]:
    """Read a `key = value` manifest; blank lines and `#` comments are ignored"""
    path = Path(path)
    if not path.is_file():
        raise DomainError(f"sweep manifest not found: {path}")
    return dict(dotenv_values(path))
