"""Centralizer - exact verification of su(2) three-fold centralizers as Racah quotients."""

__version__ = "0.1.0"

from .logger import get_logger

__all__ = ["get_logger", "__version__"]
