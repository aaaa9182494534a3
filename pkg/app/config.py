"""
Configuration management
Environment-based settings for tolerances, search defaults and logging
"""

import os
from typing import Optional
from pydantic_settings import BaseSettings, SettingsConfigDict
from pydantic import field_validator


class Settings(BaseSettings):
    """Tolerances, search limits and logging, read from EVIDENCE_* variables and .env"""

    model_config = SettingsConfigDict(
        env_prefix="EVIDENCE_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Body validation
    normalization_tolerance: float = 1e-9
    mass_floor: float = 1e-15

    # Soft checks
    conjecture_tolerance: float = 1e-9
    strife_ceiling: float = 0.902  # 0.892 estimate + 0.01 slack

    # Subadditivity search
    violation_threshold: float = 1e-9
    relative_epsilon: float = 1e-12
    search_max_focal: int = 6
    search_workers: int = 1

    # Maximizer
    default_resolution: float = 1e-4
    restart_count: int = 8

    # Output
    default_precision: int = 6

    # Logging
    log_level: str = "INFO"
    log_dir: Optional[str] = None
    log_json: bool = True

    @field_validator(
        "normalization_tolerance",
        "mass_floor",
        "conjecture_tolerance",
        "violation_threshold",
        "relative_epsilon",
    )
    @classmethod
    def validate_tolerance(cls, v):
        if v <= 0:
            raise ValueError("tolerances must be positive")
        return v

    @field_validator("default_precision")
    @classmethod
    def validate_precision(cls, v):
        if not 0 <= v <= 15:
            raise ValueError("precision must be between 0 and 15")
        return v

    @field_validator("default_resolution")
    @classmethod
    def validate_resolution(cls, v):
        if not 0 < v <= 0.01:
            raise ValueError("resolution must lie in (0, 0.01]")
        return v

    @field_validator("search_workers", "search_max_focal", "restart_count")
    @classmethod
    def validate_positive_count(cls, v):
        if v < 1:
            raise ValueError("counts must be at least 1")
        return v


class DevelopmentSettings(Settings):
    """Verbose logging for local runs"""
    log_level: str = "INFO"


class ProductionSettings(Settings):
    """Warnings only"""
    log_level: str = "WARNING"


class TestingSettings(Settings):
    """Warnings only, no log files"""
    log_level: str = "WARNING"
    log_dir: Optional[str] = None


def get_settings() -> Settings:
    """Profile picked by the ENVIRONMENT variable"""
    env = os.getenv("ENVIRONMENT", "development").lower()

    if env == "production":
        return ProductionSettings()
    elif env == "testing":
        return TestingSettings()
    else:
        return DevelopmentSettings()


# Global settings instance
settings = get_settings()


def get_config_summary(current: Optional[Settings] = None):
    """Effective settings, logged at start-up"""
    current = current or settings
    return {
        "environment": os.getenv("ENVIRONMENT", "development"),
        "normalization_tolerance": current.normalization_tolerance,
        "violation_threshold": current.violation_threshold,
        "default_resolution": current.default_resolution,
        "default_precision": current.default_precision,
        "search_workers": current.search_workers,
        "log_level": current.log_level,
        "log_dir": current.log_dir,
    }
