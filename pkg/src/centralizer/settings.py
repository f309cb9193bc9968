"""Run settings loaded from YAML with environment overrides."""

import os
from pathlib import Path
from typing import Literal, Optional, Union

import yaml
from pydantic import BaseModel, Field, ValidationError, model_validator

from .config import DEFAULT_CONFIG_FILE
from .errors import SettingsError
from .logger import LogLevel, get_logger

logger = get_logger("centralizer.settings")

ENV_PREFIX = "CENTRALIZER_"
ENV_OVERRIDES = ("lmax", "spin_cap", "log_level")


class Settings(BaseModel):
    """Effective configuration of a run."""

    lmin: int = Field(default=4, ge=1, description="Smallest truncation degree tried")
    lmax: int = Field(default=10, ge=4, le=12, description="Largest truncation degree tried")
    max_abstract_degree: int = Field(default=8, ge=4, le=12)
    spin_cap: int = Field(default=8, ge=0, le=8, description="Cap on twice-spin for matrix work")
    conjecture_spin_cap: int = Field(default=4, ge=0, le=8)
    output: Literal["text", "json"] = "text"
    parallel: bool = False
    workers: Optional[int] = Field(default=None, ge=1)
    log_level: LogLevel = LogLevel.INFO

    @model_validator(mode="after")
    def _check_degrees(self) -> "Settings":
        if self.lmin > self.lmax:
            raise ValueError(f"lmin ({self.lmin}) exceeds lmax ({self.lmax})")
        return self

    def __str__(self) -> str:
        lines = [
            f"Truncation degrees: {self.lmin}..{self.lmax} "
            f"(abstract presentations up to {self.max_abstract_degree})",
            f"Spin cap (twice-spin): {self.spin_cap}, conjecture sweep: {self.conjecture_spin_cap}",
            f"Output: {self.output}",
            f"Parallel: {self.parallel} (workers: {self.workers or 'cpu count'})",
            f"Log level: {self.log_level.value}",
        ]
        return "\n".join(lines)


def load_settings(config_path: Optional[Union[str, Path]] = None) -> Settings:
    """Load settings from YAML, then apply environment overrides.

    Args:
        config_path: Path to a YAML file with a top-level ``centralizer`` key.
            Defaults to ``CENTRALIZER_CONFIG_PATH`` or the bundled file.

    Returns:
        Validated settings.

    Raises:
        SettingsError: if the file cannot be read or a value is out of range.
    """
    path = Path(config_path or os.getenv(f"{ENV_PREFIX}CONFIG_PATH") or DEFAULT_CONFIG_FILE)
    try:
        with open(path, "r", encoding="utf-8") as f:
            config_data = yaml.safe_load(f) or {}
    except (OSError, yaml.YAMLError) as e:
        logger.error(f"Failed to load configuration from {path}: {e}")
        raise SettingsError(f"cannot read configuration {path}: {e}") from e

    data = dict(config_data.get("centralizer") or {})
    for key in ENV_OVERRIDES:
        value = os.getenv(f"{ENV_PREFIX}{key.upper()}")
        if value:
            data[key] = value.upper() if key == "log_level" else value
    try:
        settings = Settings(**data)
    except ValidationError as e:
        raise SettingsError(f"invalid configuration in {path}: {e}") from e
    logger.debug(f"settings loaded from {path}")
    return settings


__all__ = ["Settings", "SettingsError", "load_settings"]
