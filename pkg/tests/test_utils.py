"""
Unit tests for utility functions and settings
"""

import time

import pytest

from src.config import Settings, get_settings
from src.utils import (
    Timer,
    log_execution_time,
    parse_bool,
    parse_int_list,
    parse_number_list,
)


class TestParsing:
    """Test list and flag parsing"""

    def test_parse_number_list(self):
        """Commas and semicolons separate entries; blanks are skipped"""
        assert parse_number_list("1, 2.5;3,") == [1.0, 2.5, 3.0]
        assert parse_number_list(["4", 5]) == [4.0, 5.0]

    def test_parse_int_list(self):
        """Integral floats are accepted, fractions rejected"""
        assert parse_int_list("2,1.0,0") == [2, 1, 0]
        with pytest.raises(ValueError):
            parse_int_list("1,1.5")

    @pytest.mark.parametrize(
        "value,expected",
        [("true", True), (" Yes ", True), ("1", True), ("off", False), ("", False), (None, False), (True, True)],
    )
    def test_parse_bool(self, value, expected):
        """Manifest-style booleans"""
        assert parse_bool(value) is expected


class TestTimer:
    """Test Timer class"""

    def test_timer_basic_functionality(self):
        """Test basic timer functionality"""
        timer = Timer()
        assert timer.elapsed() is None
        assert timer.elapsed_ms() is None

        timer.start()
        time.sleep(0.01)
        elapsed = timer.elapsed()
        assert elapsed is not None
        assert 0 < elapsed < 1

    def test_timer_stop(self):
        """A stopped timer no longer advances"""
        with Timer() as timer:
            time.sleep(0.01)
        first = timer.elapsed()
        time.sleep(0.01)
        assert timer.elapsed() == first
        assert timer.elapsed_ms() >= 9


class TestLogExecutionTime:
    """Test the timing decorator"""

    def test_returns_result(self):
        """The wrapped function's result and name survive"""

        @log_execution_time
        def square(x):
            return x * x

        assert square(7) == 49
        assert square.__name__ == "square"

    def test_reraises(self):
        """Exceptions pass through after being logged"""

        @log_execution_time
        def broken():
            raise ArithmeticError("boom")

        with pytest.raises(ArithmeticError, match="boom"):
            broken()


class TestSettings:
    """Test environment-driven settings"""

    def test_defaults(self, fresh_settings, monkeypatch):
        """Built-in defaults without environment overrides"""
        for name in ("DIMSPREAD_QUADRATURE_RTOL", "DIMSPREAD_DEFAULT_SCAN_DIMENSIONS"):
            monkeypatch.delenv(name, raising=False)
        settings = Settings(_env_file=None)
        assert settings.quadrature_rtol == 1e-10
        assert settings.rate_window == (-1.6, -0.6)
        assert settings.scan_dimensions == [20, 50, 100, 200, 500, 1000]

    def test_environment_override(self, fresh_settings, monkeypatch):
        """DIMSPREAD_ variables override defaults"""
        monkeypatch.setenv("DIMSPREAD_MAX_WORKERS", "7")
        monkeypatch.setenv("DIMSPREAD_LOG_LEVEL", " debug ")
        monkeypatch.setenv("DIMSPREAD_DEFAULT_SCAN_DIMENSIONS", "10, 30,90 ,270")
        settings = get_settings()
        assert settings.max_workers == 7
        assert settings.log_level == "DEBUG"
        assert settings.scan_dimensions == [10, 30, 90, 270]

    def test_cached(self, fresh_settings):
        """get_settings returns one shared instance"""
        assert get_settings() is get_settings()

    def test_invalid_value(self, fresh_settings, monkeypatch):
        """Out-of-range values are rejected"""
        monkeypatch.setenv("DIMSPREAD_QUADRATURE_RTOL", "0")
        with pytest.raises(ValueError):
            get_settings()
