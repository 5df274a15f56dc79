"""
Display utilities for landau-clusters.

This module handles the user-facing output:
- The one-line result summary (the only thing written to stdout)
- Logging of the resolved configuration and of the written artifact
"""

import dataclasses
import sys


def print_configuration(config, logger):
    """
    Log the resolved run configuration at INFO level.

    Parameters:
        config (RunConfig): Resolved parameters.
        logger (logging.Logger): Logger instance.
    """
    logger.info("Configuration:")
    for field in dataclasses.fields(config):
        logger.info(f"  {field.name}: {getattr(config, field.name)}")
    logger.info(f"  output file: {config.output_path}")


def format_summary(summary: str) -> str:
    """Collapse a summary to a single line."""
    return ' '.join(str(summary).split())


def print_summary(summary: str, path, logger, stream=None):
    """Print the one-line summary of a finished command; the artifact path is logged."""
    logger.info(f"Result written to {path}")
    print(format_summary(summary), file=stream or sys.stdout)


def print_error(error, stream=None):
    """Print 'module: message' of a toolkit error to stderr."""
    print(str(error), file=stream or sys.stderr)
