"""
Workflow management for landau-clusters.

This module orchestrates the command workflows:
- Curve loading (built-in names or curve files)
- One handler per command / subcommand, each producing a result table
- Export of exactly one artifact per run
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Dict, Optional, Tuple

import numpy as np
import pandas as pd
from mpmath import mp

from boundary_ops import (RobinCoefficient, assemble_A, assemble_B, dtr_maps, dtr_residuals, generic_sweep,
                          jump_test, representation_check, source_side_problem)
from capacity import CURVE_BUILDERS, SmoothCurve, curve_by_name, read_curve_file, resample, solve_equilibrium
from data_exporter import ReportGenerator, TableExporter
from green_kernel import (bessel_I, coefficient_audit, eval_I, eval_I0, eval_I0_expansion, eval_Iinf,
                          expansion_coeffs)
from landau import MagneticSetup, landau_level
from toeplitz import (CurveRegion, counting_study, fit_growth_exponent, galerkin_spectrum, limit_frame,
                      radial_spectrum, tensor_spectrum_d2)
from .errors import ConfigurationError, NumericalError

logger = logging.getLogger(__name__)


@dataclass
class CommandResult:
    """Table, one-line summary and report metadata of a finished command."""
    frame: pd.DataFrame
    summary: str
    metadata: Dict[str, object] = field(default_factory=dict)


# --- Inputs ---

def load_curve(config) -> SmoothCurve:
    """
    Curve selected by the run configuration, on config.n nodes.

    No curve means the circle of radius R; the built-in circle also takes R.

    Raises:
        ConfigurationError: If the curve cannot be built from the given input.
    """
    try:
        if config.curve is None or config.curve == 'circle':
            return curve_by_name('circle', config.n, radius=config.R)
        if config.curve in CURVE_BUILDERS:
            return curve_by_name(config.curve, config.n)
        return resample(read_curve_file(config.curve), config.n)
    except ValueError as e:
        raise ConfigurationError(f"curve '{config.curve}': {e}", module=__name__) from e


def load_region(config) -> CurveRegion:
    """Galerkin region bounded by the run's curve; it must be star-shaped about its centroid."""
    region = CurveRegion(load_curve(config))
    if not region.is_star_shaped():
        raise ConfigurationError(f"curve '{region.curve.name}' is not star-shaped about its centroid",
                                 module=__name__)
    return region


def toeplitz_spectrum(config):
    """Spectrum of the run: product of disks (d = 2), a curve, or a disk."""
    if config.d == 2:
        epsilon_min = min(config.epsilon) if config.subcommand == 'counting' else None
        return tensor_spectrum_d2(config.q, config.b, config.R1, config.R2, config.cutoff, config.precision,
                                  epsilon_min)
    if config.curve is not None:
        return galerkin_spectrum(config.q, config.b, load_region(config))
    return radial_spectrum(config.q, config.b, config.R, config.jmax, config.precision)


def default_source(curve: SmoothCurve, side: str) -> complex:
    """A source point on the side opposite to the tested one."""
    center = curve.centroid()
    if side == 'exterior':
        return center
    return center + 2.0 * float(np.max(np.abs(curve.points - center)))


# --- landau / green / capacity ---

def run_landau_level(config) -> CommandResult:
    level = landau_level(MagneticSetup(config.b, config.d), config.q)
    frame = pd.DataFrame([{'b': config.b, 'd': config.d, 'q': config.q, 'level': level}])
    return CommandResult(frame, f"{level:g}")


def run_green_profile(config) -> CommandResult:
    coeffs = expansion_coeffs(config.d, config.N, config.convention)
    rows = []
    for s in config.s:
        value_I0 = eval_I0(s, config.d)
        expansion = eval_I0_expansion(s, config.d, coeffs) if s < 1 else None
        rows.append({
            's': s,
            'I': mp.nstr(eval_I(s, config.d), 17),
            'I0': mp.nstr(value_I0, 17),
            'Iinf': mp.nstr(eval_Iinf(s, config.d), 17),
            'bessel': float(bessel_I(s, config.d)),
            'expansion': mp.nstr(expansion, 17) if expansion is not None else '',
            'residual': mp.nstr(expansion - value_I0, 6) if expansion is not None else '',
        })
    frame = pd.DataFrame(rows, columns=['s', 'I', 'I0', 'Iinf', 'bessel', 'expansion', 'residual'])
    return CommandResult(frame, f"I({config.s[0]:g}) = {frame['I'].iloc[0]}",
                         {'d': config.d, 'N': config.N, 'convention': config.convention})


def run_green_coeffs(config) -> CommandResult:
    coeffs = expansion_coeffs(config.d, config.N, config.convention)
    frame = coeffs.to_frame()
    return CommandResult(frame, f"{len(frame)} coefficients ({config.convention})",
                         {'d': config.d, 'N': config.N, 'convention': config.convention,
                          'series_terms': coeffs.series_terms})


def run_green_audit(config) -> CommandResult:
    frame = coefficient_audit(config.d, config.N, samples=config.s)
    residuals = frame[frame['kind'] == 'residual']
    return CommandResult(frame, f"audit of {len(frame) - len(residuals)} coefficients at {len(residuals)} samples",
                         {'d': config.d, 'N': config.N})


def run_capacity(config) -> CommandResult:
    curve = load_curve(config)
    measure = solve_equilibrium(curve)
    frame = pd.DataFrame([{
        'curve': curve.name,
        'capacity': measure.capacity,
        'robin_constant': measure.robin_constant,
        'n': measure.n,
        'residual': measure.residual,
        'total_mass': measure.total_mass,
        'nonnegative': measure.nonnegative,
        'rescaled': measure.rescaled,
    }])
    return CommandResult(frame, f"{measure.capacity:.15g}")


# --- toeplitz ---

def run_toeplitz_spectrum(config) -> CommandResult:
    spectrum = toeplitz_spectrum(config)
    frame = spectrum.to_frame()
    return CommandResult(frame, f"{len(spectrum)} eigenvalues on {spectrum.domain}, s_1 = "
                                f"{mp.nstr(spectrum.eigenvalues[0], 15)}", spectrum.metadata())


def run_toeplitz_counting(config) -> CommandResult:
    spectrum = toeplitz_spectrum(config)
    frame = counting_study(spectrum, config.epsilon)
    metadata = spectrum.metadata()
    if int((frame['count'] > 0).sum()) >= 2:
        fit = fit_growth_exponent(frame, spectrum.q, spectrum.d)
        metadata['fit'] = {'exponent': fit.exponent, 'constant': fit.constant,
                           'constant_over_q': fit.constant_over_q,
                           'constant_over_q_plus_1': fit.constant_over_q_plus_1}
    last = frame.iloc[-1]
    return CommandResult(frame, f"n({last['epsilon']:g}) = {last['count']}, normalized {last['normalized']:.4f}",
                         metadata)


def run_toeplitz_limit(config) -> CommandResult:
    spectrum = toeplitz_spectrum(config)
    # eigenvalues at the noise level of the spectrum carry no limit information
    resolved = sum(1 for value in spectrum.eigenvalues if value > spectrum.eigenvalue_error)
    if resolved < config.jmax:
        logger.warning(f"Only {resolved} eigenvalues on {spectrum.domain} are resolved; limit table stops at j={resolved}")
    frame = limit_frame(spectrum, min(config.jmax, resolved))
    last = frame.iloc[-1]
    return CommandResult(frame, f"(j! s_j)^(1/j) at j={last['j']}: {mp.nstr(mp.mpf(last['limit']), 10)}",
                         spectrum.metadata())


# --- bie ---

def run_bie_assemble(config) -> CommandResult:
    curve = load_curve(config)
    operator = (assemble_A if config.kind == 'A' else assemble_B)(curve, config.b)
    metadata = {'kind': operator.kind, 'curve': curve.name, 'n': operator.n,
                'hermitian_defect': operator.hermitian_defect(), 'condition': operator.condition()}
    return CommandResult(operator.to_frame(), f"{operator.kind} on '{curve.name}' with n={operator.n}, "
                                              f"cond {metadata['condition']:.3g}", metadata)


def run_bie_jump(config) -> CommandResult:
    curve = load_curve(config)
    mode = config.mode
    report = jump_test(curve, config.b, lambda t: np.exp(1j * mode * t), config.node)
    deviations = report.deviations()
    frame = pd.DataFrame({'quantity': list(deviations), 'deviation': list(deviations.values())})
    return CommandResult(frame, f"max jump deviation {report.max_deviation():.3e} at node {config.node}",
                         report.to_dict())


def run_bie_dtr(config) -> CommandResult:
    curve = load_curve(config)
    maps = dtr_maps(curve, config.b, RobinCoefficient.constant(config.tau, curve.n))
    residuals = dtr_residuals(maps)
    frame = pd.DataFrame([{'side': side, 'residual': value, 'condition': maps[f'DtR_{side}'].condition()}
                          for side, value in residuals.items()])
    return CommandResult(frame, f"max residual {max(residuals.values()):.3e}",
                         {'curve': curve.name, 'n': curve.n, 'tau': config.tau,
                          'condition_A': maps['A'].condition()})


def run_bie_generic(config) -> CommandResult:
    curve = load_curve(config)
    sweep = generic_sweep(curve, config.b, RobinCoefficient.constant(config.tau, curve.n))
    return CommandResult(sweep.frame, f"{sweep.singular_count} of {len(sweep.frame)} shifts singular",
                         {'curve': curve.name, 'n': curve.n, 'singular_epsilons': sweep.singular_epsilons})


def run_bie_represent(config) -> CommandResult:
    curve = load_curve(config)
    source = complex(*config.y0) if config.y0 is not None else default_source(curve, config.side)
    problem = source_side_problem(curve, source, config.side)
    if problem:
        raise ConfigurationError(problem, module=__name__)
    report = representation_check(curve, config.b, source, config.side)
    frame = pd.DataFrame([{'side': report.side, 'source_x1': report.source.real, 'source_x2': report.source.imag,
                           'n': report.n, 'points': report.points, 'max_residual': report.max_residual}])
    return CommandResult(frame, f"{report.side} representation residual {report.max_residual:.3e}",
                         report.to_dict())


HANDLERS: Dict[Tuple[str, Optional[str]], Callable] = {
    ('landau', 'level'): run_landau_level,
    ('green', 'profile'): run_green_profile,
    ('green', 'coeffs'): run_green_coeffs,
    ('green', 'audit'): run_green_audit,
    ('capacity', None): run_capacity,
    ('toeplitz', 'spectrum'): run_toeplitz_spectrum,
    ('toeplitz', 'counting'): run_toeplitz_counting,
    ('toeplitz', 'limit'): run_toeplitz_limit,
    ('bie', 'assemble'): run_bie_assemble,
    ('bie', 'jump'): run_bie_jump,
    ('bie', 'dtr'): run_bie_dtr,
    ('bie', 'generic'): run_bie_generic,
    ('bie', 'represent'): run_bie_represent,
}


_NUMERICAL_PACKAGES = ('landau', 'green_kernel', 'capacity', 'toeplitz', 'boundary_ops')


def _origin_module(error: BaseException) -> str:
    """Innermost module of the numerical packages on the traceback of error."""
    origin = __name__
    tb = error.__traceback__
    while tb is not None:
        name = tb.tb_frame.f_globals.get('__name__', '')
        if name.split('.')[0] in _NUMERICAL_PACKAGES:
            origin = name
        tb = tb.tb_next
    return origin


def run(config, logger=logger) -> Tuple[Path, str]:
    """
    Run one command and write its artifact.

    Inputs are checked before any computation (argument validation, curve
    loading, region and source checks), so a ValueError or ArithmeticError
    escaping a numerical package is a numerical failure.

    Returns:
        tuple: (path of the written file, one-line summary).

    Raises:
        ConfigurationError: On input rejected before the computation.
        NumericalError: On a numerical failure; foreign ValueError and
            ArithmeticError (numpy LinAlgError included) are wrapped.
    """
    words = ' '.join(part for part in (config.command, config.subcommand) if part)
    handler = HANDLERS.get((config.command, config.subcommand))
    if handler is None:
        raise ConfigurationError(f"unknown command '{words}'", module=__name__)
    logger.info(f"Running {words}")
    try:
        result = handler(config)
    except (ValueError, ArithmeticError) as e:
        raise NumericalError(f"{type(e).__name__}: {e}", module=_origin_module(e)) from e

    report = ReportGenerator(config).create_report(result.frame, result.metadata) if config.format == 'json' else None
    path = TableExporter(config.format).export(result.frame, config.output_path, report)
    return path, result.summary
