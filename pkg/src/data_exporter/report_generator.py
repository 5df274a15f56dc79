"""
JSON reports for command results.

Every report embeds the fully resolved run configuration under "config"
so an artifact can be regenerated from its own contents.
"""

import dataclasses

import numpy as np
import pandas as pd

from .table_exporter import frame_records


class ReportGenerator:
    """Class for generating JSON result reports"""

    def __init__(self, run_config):
        """
        Initialize the report generator

        Args:
            run_config: Resolved RunConfig of the command
        """
        self.run_config = run_config

    def config_dict(self) -> dict:
        return to_jsonable(dataclasses.asdict(self.run_config))

    def create_report(self, frame: pd.DataFrame, metadata=None) -> dict:
        """Report with config, metadata and the result table."""
        return {
            'command': self.run_config.command,
            'subcommand': self.run_config.subcommand,
            'config': self.config_dict(),
            'metadata': to_jsonable(metadata or {}),
            'table': frame_records(frame),
        }


def to_jsonable(value):
    """Convert numpy, complex and tuple values to plain JSON types."""
    if isinstance(value, dict):
        return {str(key): to_jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(item) for item in value]
    if isinstance(value, (complex, np.complexfloating)):
        return [float(value.real), float(value.imag)]
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, np.ndarray):
        return to_jsonable(value.tolist())
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    return str(value)
