"""
Configuration settings for JacobiLie.

Uses Pydantic Settings for environment variable support and type validation.
Settings can be overridden via JACOBI_* environment variables.
"""

import logging
from pathlib import Path
from typing import List, Optional

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict
from rich.console import Console
from rich.logging import RichHandler


class Settings(BaseSettings):
    """
    Application settings with environment variable support.

    Environment variables:
    - JACOBI_CATALOG_DIR: Override the bundled catalog directory
    - JACOBI_SEED: Seed for the numeric zero-test sampler
    - JACOBI_PRECISION_DPS: Decimal digits for numeric evaluation
    - JACOBI_LOG_LEVEL: Logging level for the jacobilie logger tree

    Example:
        export JACOBI_SEED=7
        export JACOBI_ZERO_TEST_POINTS=40
    """

    model_config = SettingsConfigDict(
        env_prefix="JACOBI_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore"
    )

    # Catalog
    catalog_dir: Optional[Path] = None

    # Numeric zero test
    seed: int = 20240601
    zero_test_points: int = Field(default=20, ge=1)
    zero_threshold: float = Field(default=1e-30, gt=0)
    precision_dps: int = Field(default=120, ge=16)
    sample_numerator_bound: int = Field(default=50, ge=1)
    sample_denominator_bound: int = Field(default=50, ge=1)
    max_resample_attempts: int = Field(default=200, ge=1)

    # Closure detection
    closure_sample_points: int = Field(default=6, ge=2)
    rank_tolerance: float = 1e-25
    coefficient_denominator_limit: int = 1000

    # Grid enumeration
    grid_values: List[int] = Field(default_factory=lambda: [-2, -1, 0, 1, 2])

    # Application metadata
    app_name: str = "JacobiLie"
    app_version: str = "1.0.0"
    app_description: str = "Jacobi structures on real two- and three-dimensional Lie groups"

    # Logging
    log_level: str = "WARNING"

    @field_validator('log_level')
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """Normalize and validate the logging level name."""
        level = v.strip().upper()
        if level not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ValueError(f"Unknown log level: {v}")
        return level

    def get_catalog_dir(self) -> Path:
        """Return the catalog directory, defaulting to the bundled data."""
        if self.catalog_dir is not None:
            return self.catalog_dir
        return Path(__file__).resolve().parent.parent / "data"


def configure_logging(level: Optional[str] = None) -> None:
    """
    Attach a Rich handler writing to stderr to the jacobilie logger tree.

    Safe to call more than once; the handler is only installed the first time.

    Args:
        level: Logging level name (uses settings.log_level if None)
    """
    logger = logging.getLogger("jacobilie")
    logger.setLevel(level or settings.log_level)
    if not any(isinstance(h, RichHandler) for h in logger.handlers):
        handler = RichHandler(
            console=Console(stderr=True),
            show_path=False,
            rich_tracebacks=False,
        )
        handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))
        logger.addHandler(handler)
        logger.propagate = False


# Global settings instance
settings = Settings()
