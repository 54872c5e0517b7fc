"""
Logging configuration for AW Forge.

Console output goes to stderr; stdout is reserved for reports.
"""

import logging
import sys
from pathlib import Path
from typing import List, Optional

LOG_FORMAT = '%(asctime)s [%(levelname)-8s] %(name)s: %(message)s'
DATE_FORMAT = '%Y-%m-%dT%H:%M:%S'

# Libraries whose records only matter at WARNING and above
QUIET_LOGGERS = ("numpy", "pandas", "concurrent.futures")


def _handlers(log_level: int, log_file: Optional[Path]) -> List[logging.Handler]:
    formatter = logging.Formatter(LOG_FORMAT, datefmt=DATE_FORMAT)

    console = logging.StreamHandler(sys.stderr)
    console.setLevel(log_level)
    console.setFormatter(formatter)
    handlers: List[logging.Handler] = [console]

    if log_file:
        log_file = Path(log_file)
        log_file.parent.mkdir(parents=True, exist_ok=True)
        to_file = logging.FileHandler(log_file)
        to_file.setLevel(logging.DEBUG)
        to_file.setFormatter(formatter)
        handlers.append(to_file)

    return handlers


def setup_logging(
    level: str = "INFO",
    log_file: Optional[Path] = None,
    debug: bool = False,
):
    """
    Configure the root logger for a CLI run.

    Float-mode arithmetic can raise numpy RuntimeWarnings (overflow,
    division by zero near a root of unity); these are captured into the
    ``py.warnings`` logger instead of being printed bare.

    Args:
        level: Log level name (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        log_file: Optional log file, always written at DEBUG
        debug: Force DEBUG on the console
    """
    log_level = logging.DEBUG if debug else getattr(logging, level.upper(), logging.INFO)

    logging.basicConfig(level=logging.DEBUG, handlers=_handlers(log_level, log_file), force=True)
    logging.captureWarnings(True)

    for name in QUIET_LOGGERS:
        logging.getLogger(name).setLevel(logging.WARNING)

    logging.getLogger(__name__).debug(
        f"Logging configured: level={logging.getLevelName(log_level)}, file={log_file}"
    )


def setup_from_config(config, debug: bool = False):
    """Reconfigure logging from a loaded Config."""
    setup_logging(level=config.log_level, log_file=config.log_file, debug=debug)
