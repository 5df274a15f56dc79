"""
Core package of landau-clusters: error hierarchy, configuration management
and command workflows.

The numerical packages import ``core.errors``, so this package only exposes
the error hierarchy and the configuration helpers; the command dispatch lives
in ``core.workflow_manager`` and is imported from there.
"""

from .errors import (LandauClustersError, ConfigurationError, NumericalError, QuadratureError, PrecisionError,
                     TruncationError, SingularSystemError, DegenerateCapacityError, ExtrapolationError)
from .config_manager import setup_logging, load_config_file, normalize_key, create_output_directory

__all__ = [
    'LandauClustersError',
    'ConfigurationError',
    'NumericalError',
    'QuadratureError',
    'PrecisionError',
    'TruncationError',
    'SingularSystemError',
    'DegenerateCapacityError',
    'ExtrapolationError',
    'setup_logging',
    'load_config_file',
    'normalize_key',
    'create_output_directory'
]
