"""
Shared constants of the landau-clusters package.
"""

from .constants import *

__all__ = [
    'APP_NAME',
    'APP_DESCRIPTION',
    'EXIT_SUCCESS',
    'EXIT_INTERRUPTED',
    'EXIT_CONFIGURATION_ERROR',
    'EXIT_NUMERICAL_ERROR',
    'COMMANDS',
    'DEFAULT_OUTPUT_PREFIX'
]
