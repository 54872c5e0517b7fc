"""
Configuration management for AW Forge.
Loads settings from environment variables with sensible defaults.
"""

import os
from pathlib import Path
from dataclasses import dataclass
from dotenv import load_dotenv

# Load .env file if it exists
load_dotenv()

# Base directory for the project
BASE_DIR = Path(__file__).parent

MODES = ("exact", "float", "complex")


@dataclass
class Config:
    """Application configuration loaded from environment variables."""

    # Arithmetic
    default_mode: str = "exact"
    float_tolerance: float = 1e-9
    spectrum_tolerance: float = 1e-8

    # Parameter sweeps
    threads: int = 1
    default_draws: int = 20
    default_seed: int = 7

    # Output
    report_dir: Path = BASE_DIR / "reports"

    # Logging
    log_level: str = "INFO"
    log_file: Path = None

    def __post_init__(self):
        """Convert string paths to Path objects if needed."""
        if isinstance(self.report_dir, str):
            self.report_dir = Path(self.report_dir)
        if isinstance(self.log_file, str):
            self.log_file = Path(self.log_file)

    def ensure_directories(self):
        """Create necessary directories if they don't exist."""
        self.report_dir.mkdir(parents=True, exist_ok=True)


def load_config() -> Config:
    """
    Load configuration from environment variables.

    Returns:
        Config: Configuration object with all settings

    Raises:
        ValueError: If a numeric environment variable does not parse
    """
    try:
        config = Config(
            default_mode=os.getenv("AW_FORGE_MODE", "exact").lower(),
            threads=int(os.getenv("AW_FORGE_THREADS", "1")),
            default_draws=int(os.getenv("AW_FORGE_DRAWS", "20")),
            default_seed=int(os.getenv("AW_FORGE_SEED", "7")),
            float_tolerance=float(os.getenv("AW_FORGE_FLOAT_TOL", "1e-9")),
            spectrum_tolerance=float(os.getenv("AW_FORGE_SPECTRUM_TOL", "1e-8")),
            report_dir=os.getenv("AW_FORGE_REPORT_DIR", str(BASE_DIR / "reports")),
            log_level=os.getenv("LOG_LEVEL", "INFO"),
            log_file=os.getenv("LOG_FILE")
        )
    except ValueError as e:
        raise ValueError(f"Invalid AW_FORGE_* environment setting: {e}") from e

    return config


def validate_config(config: Config):
    """
    Validate configuration object.

    Args:
        config: Configuration object to validate

    Raises:
        ValueError: If configuration is invalid
    """
    if config.default_mode not in MODES:
        raise ValueError(f"Unknown arithmetic mode '{config.default_mode}'. Supported: {', '.join(MODES)}")

    if config.threads < 1:
        raise ValueError("AW_FORGE_THREADS must be at least 1")

    if config.default_draws < 1:
        raise ValueError("AW_FORGE_DRAWS must be at least 1")

    if config.float_tolerance <= 0 or config.spectrum_tolerance <= 0:
        raise ValueError("Tolerances must be positive")
