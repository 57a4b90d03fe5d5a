"""
Utility functions for the dimspread toolkit
"""

import math
import time
from collections.abc import Callable
from functools import wraps
from typing import Any, TypeVar

from loguru import logger

F = TypeVar("F", bound=Callable[..., Any])

SIGNIFICANT_DIGITS = 17


def format_number(value: float | int | bool | None) -> str:
    """Serialize a number for CSV output with 17 significant digits"""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if math.isnan(value):
        return "nan"
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return f"{value:.{SIGNIFICANT_DIGITS}g}"


def parse_number_list(text: str | list[Any] | tuple[Any, ...]) -> list[float]:
    """Parse "1, 2.5, 3" (or an already split list) into floats"""
    if isinstance(text, list | tuple):
        return [float(item) for item in text]
    return [float(item) for item in text.replace(";", ",").split(",") if item.strip()]


def parse_int_list(text: str | list[Any] | tuple[Any, ...]) -> list[int]:
    """Parse a comma list of integers, rejecting fractional entries"""
    values = parse_number_list(text)
    if any(v != int(v) for v in values):
        raise ValueError(f"expected integers, got {values}")
    return [int(v) for v in values]


def parse_bool(value: str | bool | None) -> bool:
    if isinstance(value, bool):
        return value
    if value is None:
        return False
    return value.strip().lower() in {"1", "true", "yes", "on"}


class Timer:
    """Simple timer for measuring duration"""

    def __init__(self) -> None:
        self.start_time: float | None = None
        self.end_time: float | None = None

    def start(self) -> None:
        self.start_time = time.perf_counter()
        self.end_time = None

    def stop(self) -> None:
        if self.start_time is not None:
            self.end_time = time.perf_counter()

    def elapsed(self) -> float | None:
        """Elapsed time in seconds, None before start()"""
        if self.start_time is None:
            return None
        end = self.end_time or time.perf_counter()
        return end - self.start_time

    def elapsed_ms(self) -> int | None:
        elapsed = self.elapsed()
        return int(elapsed * 1000) if elapsed is not None else None

    def __enter__(self) -> "Timer":
        self.start()
        return self

    def __exit__(self, *exc: object) -> None:
        self.stop()


def log_execution_time(func: F) -> F:
    """Decorator to log function execution time"""

    @wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        timer = Timer()
        timer.start()
        try:
            result = func(*args, **kwargs)
            timer.stop()
            logger.debug(f"{func.__name__} executed in {timer.elapsed():.3f}s")
            return result
        except Exception as e:
            timer.stop()
            logger.error(f"{func.__name__} failed after {timer.elapsed():.3f}s: {e}")
            raise

    return wrapper  # type: ignore[return-value]
