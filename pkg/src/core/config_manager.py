"""
Configuration management for the landau-clusters command line.

This module handles:
- Logging setup (stderr, optional log file)
- Reading flat "key = value" configuration files
- Output directory creation
"""

import logging
import sys
from pathlib import Path
from typing import Dict, Optional

from config import Config
from .errors import ConfigurationError


def setup_logging(verbose=False, quiet=False, log_file: Optional[str] = None):
    """Setup logging configuration; diagnostics never go to stdout."""
    if quiet:
        level = logging.ERROR
    elif verbose:
        level = logging.DEBUG
    else:
        level = logging.WARNING

    handlers = [logging.StreamHandler(sys.stderr)]
    if log_file:
        handlers.append(logging.FileHandler(log_file))

    logging.basicConfig(
        level=level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=handlers,
        force=True
    )

    return logging.getLogger(__name__)


def normalize_key(key: str) -> str:
    return key.strip().replace('-', '_')


def load_config_file(path) -> Dict[str, str]:
    """
    Read a flat configuration file.

    Grammar: one "key = value" per line, '#' starts a comment, blank lines
    are ignored. Keys are the long flag names, with '-' or '_'.

    Returns:
        dict: Raw string values by normalized key.

    Raises:
        ConfigurationError: On unreadable files, malformed lines, unknown or repeated keys.
    """
    path = Path(path)
    try:
        lines = path.read_text().splitlines()
    except OSError as e:
        raise ConfigurationError(f"cannot read config file {path}: {e}", module=__name__)

    values = {}
    for line_number, line in enumerate(lines, start=1):
        content = line.split('#', 1)[0].strip()
        if not content:
            continue
        if '=' not in content:
            raise ConfigurationError(f"{path}:{line_number}: expected 'key = value', got '{content}'",
                                     module=__name__)
        key, value = content.split('=', 1)
        key = normalize_key(key)
        if key not in Config.CONFIG_FILE_KEYS:
            raise ConfigurationError(f"{path}:{line_number}: unknown key '{key}'", module=__name__)
        if key in values:
            raise ConfigurationError(f"{path}:{line_number}: key '{key}' given twice", module=__name__)
        values[key] = value.strip()
    return values


def create_output_directory(output_file):
    """Create the parent directory of an output file if it doesn't exist"""
    output_path = Path(output_file)
    output_path.parent.mkdir(parents=True, exist_ok=True)
    return output_path
