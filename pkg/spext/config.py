"""Configuration settings for spext."""
from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Library and CLI settings loaded from environment variables (SPEXT_*)."""

    model_config = SettingsConfigDict(
        env_prefix="SPEXT_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Service info
    app_name: str = "spext"
    app_version: str = "1.0.0"

    # Eigensolver
    tol: float = Field(1e-10, gt=0.0)
    iteration_factor: int = Field(100, ge=1)  # cap = factor * n^2 matvecs
    min_iterations_cap: int = 1000

    # Comparison guards
    compare_guard: float = Field(1e-8, gt=0.0)  # uniqueness of extremal graphs
    tie_guard: float = Field(1e-9, gt=0.0)  # Perron entries considered equal

    # Desk-scale caps
    canonical_max_order: int = 12
    enumeration_max_order: int = 9
    sweep_max_order: int = 8

    # Execution
    jobs: int = Field(1, ge=1)
    seed: int = 0
    log_level: str = "INFO"


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
