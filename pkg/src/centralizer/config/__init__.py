"""Configuration files for the centralizer package."""

from pathlib import Path

# Get the directory containing this file
CONFIG_DIR = Path(__file__).parent

# Default configuration file and the bundled presentation corpus
DEFAULT_CONFIG_FILE = CONFIG_DIR / "centralizer.yaml"
PRESENTATIONS_DIR = CONFIG_DIR / "presentations"

__all__ = ["CONFIG_DIR", "DEFAULT_CONFIG_FILE", "PRESENTATIONS_DIR"]
