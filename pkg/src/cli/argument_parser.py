"""
Command line argument parsing and validation for landau-clusters.

This module:
- Defines the command tree (landau, green, capacity, toeplitz, bie) and its flags.
- Merges explicit flags, an optional flat config file and the Config defaults
  (in that order of precedence) into a RunConfig.
- Validates the resolved parameters against the module preconditions.
"""

import argparse
import math
import re
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Optional, Tuple

from capacity.curve_library import CURVE_BUILDERS
from config.config import Config
from core.config_manager import load_config_file
from core.errors import ConfigurationError
from utils.constants import APP_DESCRIPTION, COMMANDS, DEFAULT_OUTPUT_PREFIX


@dataclass(frozen=True)
class RunConfig:
    """Fully resolved parameters of one command run."""
    command: str
    subcommand: Optional[str]
    b: float = Config.DEFAULT_B
    d: int = Config.DEFAULT_D
    q: int = Config.DEFAULT_Q
    R: float = Config.DEFAULT_RADIUS
    R1: float = Config.DEFAULT_RADIUS
    R2: float = Config.DEFAULT_RADIUS
    n: int = Config.NODES
    N: int = Config.EXPANSION_ORDER
    precision: int = Config.PRECISION_BITS
    jmax: int = Config.DEFAULT_JMAX
    epsilon: Tuple[float, ...] = Config.DEFAULT_EPSILONS
    s: Tuple[float, ...] = (1e-2, 1e-3, 1e-4)
    cutoff: int = Config.TENSOR_CUTOFF
    curve: Optional[str] = None
    tau: float = 0.0
    node: int = 0
    mode: int = 0
    side: str = 'exterior'
    y0: Optional[Tuple[float, float]] = None
    kind: str = 'A'
    convention: str = 'derived'
    output: Optional[str] = None
    format: str = Config.DEFAULT_FORMAT

    @property
    def output_path(self) -> Path:
        if self.output:
            return Path(self.output)
        name = '_'.join(part for part in (DEFAULT_OUTPUT_PREFIX, self.command, self.subcommand) if part)
        return Path(f"{name}.{self.format}")


# --- value parsing ---

def parse_float_list(text: str) -> Tuple[float, ...]:
    return tuple(float(item) for item in re.split(r'[,\s]+', text.strip()) if item)


def parse_point(text: str) -> Tuple[float, float]:
    """Parse 'x1,x2' into a point."""
    parts = parse_float_list(text)
    if len(parts) != 2:
        raise ValueError(f"expected 'x1,x2', got '{text}'")
    return parts


# key -> (converter of one config-file string)
_FILE_CONVERTERS = {
    'b': float, 'd': int, 'q': int, 'R': float, 'R1': float, 'R2': float, 'n': int, 'N': int,
    'precision': int, 'jmax': int, 'epsilon': parse_float_list, 's': parse_float_list, 'cutoff': int,
    'curve': str, 'tau': float, 'node': int, 'mode': int, 'side': str, 'y0': parse_point, 'kind': str,
    'convention': str, 'output': str, 'format': str,
}


def _add_parameters(parser: argparse.ArgumentParser):
    """Flags shared by every command; defaults are resolved after parsing."""
    S = argparse.SUPPRESS

    # --- Physical and discretization parameters ---
    group = parser.add_argument_group('parameters')
    group.add_argument('--b', type=float, default=S, help=f'Field strength (default: {Config.DEFAULT_B})')
    group.add_argument('--d', type=int, default=S, help=f'Half-dimension (default: {Config.DEFAULT_D})')
    group.add_argument('--q', type=int, default=S, help=f'Landau level index (default: {Config.DEFAULT_Q})')
    group.add_argument('--R', type=float, default=S, help='Disk radius, or circle radius for --curve circle')
    group.add_argument('--R1', type=float, default=S, help='First disk radius of a product domain (d = 2)')
    group.add_argument('--R2', type=float, default=S, help='Second disk radius of a product domain (d = 2)')
    group.add_argument('--n', type=int, default=S, help=f'Boundary node count (default: {Config.NODES})')
    group.add_argument('--N', type=int, default=S, help=f'Expansion order (default: {Config.EXPANSION_ORDER})')
    group.add_argument('--precision', type=int, default=S,
                       help=f'Binary precision of Toeplitz spectra (default: {Config.PRECISION_BITS})')
    group.add_argument('--jmax', type=int, default=S, help=f'Largest eigenvalue index (default: {Config.DEFAULT_JMAX})')
    group.add_argument('--epsilon', type=float, nargs='+', default=S, help='Counting thresholds')
    group.add_argument('--s', type=float, nargs='+', default=S, help='Arguments of the profile integral I(s)')
    group.add_argument('--cutoff', type=int, default=S, help=f'Tensor spectrum cutoff (default: {Config.TENSOR_CUTOFF})')
    group.add_argument('--curve', type=str, default=S,
                       help=f'Built-in curve ({", ".join(sorted(CURVE_BUILDERS))}) or curve file path')
    group.add_argument('--tau', type=float, default=S, help='Constant Robin coefficient (default: 0)')
    group.add_argument('--node', type=int, default=S, help='Boundary node of the jump test (default: 0)')
    group.add_argument('--mode', type=int, default=S, help='Fourier mode k of the density exp(ikt) (default: 0)')
    group.add_argument('--side', choices=['interior', 'exterior'], default=S, help='Side of the representation check')
    group.add_argument('--y0', type=parse_point, default=S, help="Source point 'x1,x2' of the representation check")
    group.add_argument('--kind', choices=['A', 'B'], default=S, help='Operator exported by bie assemble')
    group.add_argument('--convention', choices=['derived', 'printed'], default=S, help='Expansion coefficient convention')

    # --- Output and technical options ---
    group = parser.add_argument_group('output')
    group.add_argument('-o', '--output', type=str, default=S, help='Output file (default: derived from the command)')
    group.add_argument('--format', choices=['csv', 'json'], default=S, help='Output format (default: csv)')
    group.add_argument('--config', type=str, default=S, help="Flat 'key = value' configuration file")
    group.add_argument('--verbose', action='store_true', default=S, help='Enable debug logging')
    group.add_argument('--quiet', action='store_true', default=S, help='Log errors only')
    group.add_argument('--log-file', type=str, default=S, help='Also write the log to this file')


def build_parser() -> argparse.ArgumentParser:
    """
    Build the command tree.

    Each leaf command (e.g. ``toeplitz limit``) accepts all flags; the
    flags come after the command words.
    """
    parser = argparse.ArgumentParser(
        prog='landau-clusters',
        description=APP_DESCRIPTION,
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  python main.py landau level --b 1 --d 1 --q 1
  python main.py capacity --curve ellipse --n 256
  python main.py toeplitz limit --q 1 --b 2 --R 1 --jmax 40 --precision 256 --output limit.csv
  python main.py toeplitz counting --d 2 --q 1 --b 2 --epsilon 1e-12 1e-30 1e-60
  python main.py bie jump --curve perturbed_circle --node 0 --format json
        """
    )
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True
    for command, subcommands in COMMANDS.items():
        if subcommands is None:
            _add_parameters(commands.add_parser(command, help=f'{command} computations'))
            continue
        command_parser = commands.add_parser(command, help=f'{command} computations')
        leaves = command_parser.add_subparsers(dest='subcommand', metavar='subcommand')
        leaves.required = True
        for subcommand in subcommands:
            _add_parameters(leaves.add_parser(subcommand))
    return parser


def parse_arguments(argv=None):
    """
    Parse the command line and resolve it into a RunConfig.

    Precedence: explicit flags > config file > Config defaults.

    Returns:
        tuple: (RunConfig, options) where options holds verbose, quiet and log_file.

    Raises:
        ConfigurationError: On unreadable or invalid config files and invalid parameters.
    """
    namespace = vars(build_parser().parse_args(argv))
    explicit = dict(namespace)
    options = {
        'verbose': explicit.pop('verbose', False),
        'quiet': explicit.pop('quiet', False),
        'log_file': explicit.pop('log_file', None),
    }
    config_path = explicit.pop('config', None)

    values = {}
    if config_path is not None:
        for key, raw in load_config_file(config_path).items():
            try:
                values[key] = _FILE_CONVERTERS[key](raw)
            except ValueError as e:
                raise ConfigurationError(f"{config_path}: invalid value for '{key}': {e}", module=__name__)
    values.update(explicit)
    values.setdefault('subcommand', None)
    for key in ('epsilon', 's'):
        if key in values:
            values[key] = tuple(values[key])

    known = {field.name for field in fields(RunConfig)}
    config = RunConfig(**{key: value for key, value in values.items() if key in known})
    validate_arguments(config, options)
    return config, options


def validate_arguments(config: RunConfig, options=None):
    """
    Validate a resolved RunConfig.

    Raises:
        ConfigurationError: Listing every violated constraint.
    """
    options = options or {}
    errors = []

    if not config.b > 0:
        errors.append("Field strength b must be positive")
    if not 1 <= config.d <= Config.MAX_D:
        errors.append(f"Dimension d must lie in 1..{Config.MAX_D}")
    if not 1 <= config.q <= Config.MAX_Q:
        errors.append(f"Level index q must lie in 1..{Config.MAX_Q}")
    for name in ('R', 'R1', 'R2'):
        if not getattr(config, name) > 0:
            errors.append(f"Radius {name} must be positive")
    if config.n < 4 or config.n % 2 != 0 or config.n > Config.MAX_NODES:
        errors.append(f"Node count n must be even and lie in 4..{Config.MAX_NODES}")
    if config.N < 1:
        errors.append("Expansion order N must be at least 1")
    if not 53 <= config.precision <= Config.MAX_PRECISION_BITS:
        errors.append(f"Precision must lie in 53..{Config.MAX_PRECISION_BITS} bits")
    if config.jmax < 1:
        errors.append("jmax must be at least 1")
    if config.cutoff < 1:
        errors.append("Tensor cutoff must be at least 1")
    if not config.epsilon or not all(0 < eps < 1 for eps in config.epsilon):
        errors.append("Every epsilon must lie in (0, 1)")
    if not config.s or not all(value > 0 for value in config.s):
        errors.append("Every s must be positive")
    if not 0 <= config.node < config.n:
        errors.append("Boundary node must lie in 0..n-1")
    if config.format not in ('csv', 'json'):
        errors.append("Output format must be csv or json")

    # --- command specific ---
    if config.command == 'toeplitz':
        if config.d not in (1, 2):
            errors.append("Toeplitz spectra are available for d = 1 (disks, curves) and d = 2 (product of disks)")
        if config.d == 2 and config.curve is not None:
            errors.append("d = 2 supports only the product of disks; drop --curve")
        if config.subcommand == 'counting' and not all(eps < math.exp(-math.e) for eps in config.epsilon):
            errors.append("Counting thresholds must lie in (0, e^-e)")
    if config.command in ('bie', 'capacity') and config.d != 1:
        errors.append(f"The {config.command} command works in the plane (d = 1)")
    if config.curve is not None and config.curve not in CURVE_BUILDERS and not Path(config.curve).exists():
        errors.append(f"Curve '{config.curve}' is neither a built-in curve nor an existing file")

    if options.get('verbose') and options.get('quiet'):
        errors.append("Cannot specify both --verbose and --quiet")

    if errors:
        raise ConfigurationError("invalid arguments: " + "; ".join(errors), module=__name__)
