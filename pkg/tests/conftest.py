"""
Shared pytest setup.

Imported by pytest before any test module, so the environment is settled
before `src.config` is first read.

Two things are pinned here on purpose:

- The numerical settings. The suite asserts agreements at fixed tolerances;
  a developer's .env with a looser quadrature tolerance or a smaller node
  ladder would otherwise change which assertions hold.
- Logging and the pool size. Kernels log at DEBUG; the suite keeps stderr
  quiet and runs sweeps and scans with two workers so that thread
  scheduling is still exercised.
"""

import os

import pytest

# Assigned rather than defaulted: a stray .env or exported variable would
# otherwise decide what the suite runs against.
os.environ["DIMSPREAD_LOG_LEVEL"] = "WARNING"
os.environ["DIMSPREAD_MAX_WORKERS"] = "2"
os.environ["DIMSPREAD_QUADRATURE_RTOL"] = "1e-10"
os.environ["DIMSPREAD_QUADRATURE_MAX_NODES"] = "4096"
os.environ["DIMSPREAD_BOUND_TOLERANCE"] = "1e-9"
os.environ["DIMSPREAD_DEFAULT_SCAN_DIMENSIONS"] = "20,50,100,200,500,1000"

from src.config import get_settings  # noqa: E402
from src.core.states.models import QuantumState, SystemKind  # noqa: E402

# The cache may already hold settings read during collection
get_settings.cache_clear()


@pytest.fixture
def hydrogen_ground() -> QuantumState:
    """Hydrogen 1s in three dimensions, Z = 1"""
    return QuantumState.from_m(SystemKind.HYDROGENIC, 3, 1, 0)


@pytest.fixture
def oscillator_ground() -> QuantumState:
    """Isotropic oscillator ground state in three dimensions, λ = 1"""
    return QuantumState.from_m(SystemKind.OSCILLATOR, 3, 0, 0)


@pytest.fixture
def hydrogen_excited() -> QuantumState:
    """Hydrogen n = 3, l = 1, |m| = 1 in four dimensions, Z = 2"""
    return QuantumState.from_m(SystemKind.HYDROGENIC, 4, 3, 1, 1, strength=2.0)


@pytest.fixture
def oscillator_excited() -> QuantumState:
    """Oscillator n = 1, l = 2, |m| = 1 in five dimensions, λ = 0.7"""
    return QuantumState.from_m(SystemKind.OSCILLATOR, 5, 1, 2, 1, strength=0.7)


@pytest.fixture
def fresh_settings():
    """Clear the settings cache before and after a test that patches the env"""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()
