"""
Atomic export of result tables as CSV or JSON.

Files are written to a temporary file in the target directory and moved
into place with os.replace, so an interrupted run never leaves a partial
artifact. Nothing time-dependent is written: identical inputs give
byte-identical files.
"""

import json
import logging
import os
import tempfile
from pathlib import Path

import pandas as pd

from core.config_manager import create_output_directory

logger = logging.getLogger(__name__)

EXPORT_FORMATS = ('csv', 'json')


class TableExporter:
    """Class for exporting result tables to CSV or JSON."""

    def __init__(self, export_format='csv'):
        """
        Initialize the exporter.

        Args:
            export_format: One of 'csv' or 'json'.
        """
        if export_format not in EXPORT_FORMATS:
            raise ValueError(f"unknown export format '{export_format}', expected one of {EXPORT_FORMATS}")
        self.export_format = export_format

    def export(self, frame: pd.DataFrame, output_file, report=None) -> Path:
        """
        Export a table.

        Args:
            frame: Table to export.
            output_file: Target path.
            report: JSON payload (dict) used instead of the bare table when exporting JSON.

        Returns:
            Path: The written file.
        """
        if self.export_format == 'csv':
            content = frame.to_csv(index=False)
        else:
            payload = report if report is not None else {'table': frame_records(frame)}
            content = json.dumps(payload, sort_keys=True, indent=2) + '\n'
        path = write_atomic(output_file, content)
        logger.info(f"Exported {len(frame)} row(s) to {path}")
        return path


def frame_records(frame: pd.DataFrame) -> list:
    """Table rows as JSON-ready dicts (NaN becomes null)."""
    return json.loads(frame.to_json(orient='records', double_precision=15))


def write_atomic(output_file, content: str) -> Path:
    """Write text to output_file through a temporary file and os.replace."""
    path = create_output_directory(output_file)
    descriptor, temporary = tempfile.mkstemp(dir=str(path.parent), prefix=f".{path.name}.", suffix='.tmp')
    try:
        with os.fdopen(descriptor, 'w', newline='') as handle:
            handle.write(content)
        os.replace(temporary, path)
    except BaseException:
        if os.path.exists(temporary):
            os.remove(temporary)
        raise
    return path
