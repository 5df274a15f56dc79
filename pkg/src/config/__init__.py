"""
Configuration package initialization.
"""

from .config import Config
from .numerical_defaults import QuadratureDefaults, ToeplitzDefaults, BoundaryDefaults, CliDefaults

__all__ = [
    'Config',
    'QuadratureDefaults',
    'ToeplitzDefaults',
    'BoundaryDefaults',
    'CliDefaults'
]
