"""
Signed log-magnitude numbers and vector helpers for log-domain arithmetic
"""

import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy.special import logsumexp

from src.exceptions import LogValueOverflowError

LOG_RANGE = 1.0e6


@dataclass(frozen=True)
class LogValue:
    """A real number stored as sign * exp(log_magnitude)

    sign is 0 exactly when the value is zero; log_magnitude is then -inf.
    """

    log_magnitude: float
    sign: int

    def __post_init__(self) -> None:
        if self.sign not in (-1, 0, 1):
            raise ValueError(f"LogValue sign must be -1, 0 or 1, got {self.sign}")
        if self.sign == 0:
            object.__setattr__(self, "log_magnitude", -math.inf)
        elif math.isnan(self.log_magnitude):
            raise ValueError("LogValue log_magnitude is NaN")
        elif self.log_magnitude == -math.inf:
            object.__setattr__(self, "sign", 0)
        elif abs(self.log_magnitude) > LOG_RANGE:
            raise LogValueOverflowError(
                f"log-magnitude {self.log_magnitude:.6g} outside ±{LOG_RANGE:.0e}"
            )

    @classmethod
    def zero(cls) -> "LogValue":
        return cls(-math.inf, 0)

    @classmethod
    def from_float(cls, value: float) -> "LogValue":
        if value == 0.0:
            return cls.zero()
        if not math.isfinite(value):
            raise LogValueOverflowError(f"cannot represent {value} as LogValue")
        return cls(math.log(abs(value)), 1 if value > 0 else -1)

    @classmethod
    def from_log(cls, log_magnitude: float, sign: int = 1) -> "LogValue":
        return cls(log_magnitude, sign)

    @property
    def is_zero(self) -> bool:
        return self.sign == 0

    def to_float(self) -> float:
        """Linear value; overflows to ±inf and underflows to 0"""
        if self.sign == 0:
            return 0.0
        if self.log_magnitude > 709.78:
            return math.copysign(math.inf, self.sign)
        return self.sign * math.exp(self.log_magnitude)

    def __float__(self) -> float:
        return self.to_float()

    def __neg__(self) -> "LogValue":
        return LogValue(self.log_magnitude, -self.sign)

    def __abs__(self) -> "LogValue":
        return LogValue(self.log_magnitude, abs(self.sign))

    def __mul__(self, other: "LogValue") -> "LogValue":
        if self.sign == 0 or other.sign == 0:
            return LogValue.zero()
        return LogValue(self.log_magnitude + other.log_magnitude, self.sign * other.sign)

    def __truediv__(self, other: "LogValue") -> "LogValue":
        if other.sign == 0:
            raise ZeroDivisionError("LogValue division by zero")
        if self.sign == 0:
            return LogValue.zero()
        return LogValue(self.log_magnitude - other.log_magnitude, self.sign * other.sign)

    def __pow__(self, exponent: float) -> "LogValue":
        if self.sign < 0 and not float(exponent).is_integer():
            raise ValueError("non-integer power of a negative LogValue")
        if self.sign == 0:
            if exponent <= 0:
                raise ZeroDivisionError("non-positive power of zero")
            return LogValue.zero()
        sign = self.sign if (self.sign > 0 or int(exponent) % 2) else 1
        return LogValue(self.log_magnitude * exponent, sign)

    def __add__(self, other: "LogValue") -> "LogValue":
        log_magnitude, sign = log_add_signed(
            self.log_magnitude, self.sign, other.log_magnitude, other.sign
        )
        return LogValue(float(log_magnitude), int(sign))

    def __sub__(self, other: "LogValue") -> "LogValue":
        return self + (-other)

    def __repr__(self) -> str:
        return f"LogValue(log_magnitude={self.log_magnitude!r}, sign={self.sign})"


def log_add_signed(
    log_a: ArrayLike, sign_a: ArrayLike, log_b: ArrayLike, sign_b: ArrayLike
) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    """Elementwise log|a + b| and sign(a + b) for a = sign_a*exp(log_a) etc."""
    la = np.asarray(log_a, dtype=np.float64)
    lb = np.asarray(log_b, dtype=np.float64)
    sa = np.asarray(sign_a, dtype=np.float64)
    sb = np.asarray(sign_b, dtype=np.float64)
    la = np.where(sa == 0, -np.inf, la)
    lb = np.where(sb == 0, -np.inf, lb)

    top = np.maximum(la, lb)
    finite_top = np.where(np.isfinite(top), top, 0.0)
    with np.errstate(under="ignore"):
        total = sa * np.exp(la - finite_top) + sb * np.exp(lb - finite_top)
    with np.errstate(divide="ignore"):
        log_total = np.log(np.abs(total)) + finite_top
    sign = np.sign(total)
    log_total = np.where(sign == 0, -np.inf, log_total)
    return log_total, sign


def signed_log_sum(
    logs: ArrayLike, signs: ArrayLike | None = None
) -> tuple[float, int, float]:
    """Log-sum-exp reduction of signed terms

    Returns:
        (log|Σ|, sign(Σ), log Σ|term|)
    """
    log_terms = np.asarray(logs, dtype=np.float64)
    if signs is None:
        sign_terms = np.ones_like(log_terms)
    else:
        sign_terms = np.asarray(signs, dtype=np.float64)
    live = (sign_terms != 0) & np.isfinite(log_terms)
    if not np.any(live):
        return -math.inf, 0, -math.inf

    log_terms = log_terms[live]
    sign_terms = sign_terms[live]
    log_abs_total = float(logsumexp(log_terms))
    log_value, sign = logsumexp(log_terms, b=sign_terms, return_sign=True)
    sign_int = int(sign)
    if sign_int == 0:
        return -math.inf, 0, log_abs_total
    return float(log_value), sign_int, log_abs_total
