"""Logging configuration using loguru.

Logs go to stderr so that JSON reports written to stdout stay parseable.
"""

import sys
from enum import Enum
from typing import Optional

from loguru import logger
from pydantic import BaseModel


class LogLevel(str, Enum):
    """Log level enumeration."""

    DEBUG = "DEBUG"
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"
    CRITICAL = "CRITICAL"


class LogConfig(BaseModel):
    """Logging configuration model."""

    level: LogLevel = LogLevel.INFO
    format: str = (
        "<green>{time:HH:mm:ss}</green> | <level>{level: <8}</level> | "
        "<cyan>{extra[name]}</cyan> - <level>{message}</level>"
    )
    colorize: bool = True
    serialize: bool = False


def configure_logger(config: Optional[LogConfig] = None) -> None:
    """Install a single stderr sink with the given settings.

    Args:
        config: Optional logging configuration. If None, uses default settings.
    """
    if config is None:
        config = LogConfig()

    logger.remove()
    logger.configure(extra={"name": "centralizer"})
    logger.add(
        sink=sys.stderr,
        format=config.format,
        level=config.level.value,
        colorize=config.colorize,
        serialize=config.serialize,
        backtrace=True,
        diagnose=False,
    )


def get_logger(name: Optional[str] = None):
    """Get a logger bound to a component name.

    Args:
        name: Optional component name, e.g. ``centralizer.ncalg``.

    Returns:
        Configured loguru logger instance.
    """
    if name:
        return logger.bind(name=name)
    return logger


configure_logger()
