"""
Main configuration aggregator module.

This module consolidates the numerical default groups into a single
configuration class. It serves as the central access point for quadrature,
Toeplitz, boundary-integral and command-line defaults.
"""

from .numerical_defaults import QuadratureDefaults, ToeplitzDefaults, BoundaryDefaults, CliDefaults


class Config(QuadratureDefaults, ToeplitzDefaults, BoundaryDefaults, CliDefaults):
    """
    Unified configuration class combining all numerical defaults
    by multiple inheritance from the specific default groups.
    """

    # keys accepted in a flat "key = value" config file
    CONFIG_FILE_KEYS = (
        'b', 'd', 'q', 'R', 'R1', 'R2', 'n', 'N', 'precision', 'jmax', 'epsilon', 'curve', 'output',
        'format', 'tau', 's', 'cutoff', 'node', 'mode', 'side', 'y0', 'kind', 'convention',
    )
