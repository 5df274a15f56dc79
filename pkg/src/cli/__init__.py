"""
Command-line interface package for landau-clusters.
"""

from .argument_parser import RunConfig, build_parser, parse_arguments, validate_arguments
from .display_utils import print_configuration, format_summary, print_summary, print_error

__all__ = [
    'RunConfig',
    'build_parser',
    'parse_arguments',
    'validate_arguments',
    'print_configuration',
    'format_summary',
    'print_summary',
    'print_error'
]
