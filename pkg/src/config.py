"""
Configuration management for the dimspread toolkit
"""

from functools import lru_cache

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Numerical and runtime settings with environment variable support"""

    # Application Configuration
    log_level: str = Field(default="INFO")
    max_workers: int = Field(default=4, ge=1)

    # Quadrature Configuration
    quadrature_rtol: float = Field(default=1e-10, gt=0.0)
    quadrature_min_nodes: int = Field(default=32, ge=1)
    quadrature_max_nodes: int = Field(default=4096, ge=1)
    rule_cache_size: int = Field(default=512, ge=1)
    log_zero_cutoff: float = Field(default=-700.0)

    # Measure Configuration
    renyi_shannon_switch: float = Field(default=1e-6, gt=0.0)
    bound_tolerance: float = Field(default=1e-9, ge=0.0)
    conjugacy_tolerance: float = Field(default=1e-12, gt=0.0)

    # Asymptotics Configuration
    rate_window_low: float = Field(default=-1.6)
    rate_window_high: float = Field(default=-0.6)
    exact_residual_floor: float = Field(default=1e-13, gt=0.0)
    default_scan_dimensions: str = Field(default="20,50,100,200,500,1000")

    @field_validator("log_level")
    @classmethod
    def _upper_log_level(cls, value: str) -> str:
        return value.strip().upper()

    @property
    def scan_dimensions(self) -> list[int]:
        """Convert default_scan_dimensions string to list of integers"""
        return [
            int(item.strip())
            for item in self.default_scan_dimensions.split(",")
            if item.strip()
        ]

    @property
    def rate_window(self) -> tuple[float, float]:
        """Accepted window for fitted residual decay rates"""
        return (self.rate_window_low, self.rate_window_high)

    model_config = SettingsConfigDict(
        env_prefix="DIMSPREAD_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance"""
    return Settings()
