from .smooth_curve import SmoothCurve
from .curve_library import (
    circle, ellipse, perturbed_circle, curve_by_name, from_samples,
    spectral_derivatives, trigonometric_resample, resample, read_curve_file, write_curve_file, CURVE_BUILDERS,
)
from .equilibrium_solver import EquilibriumMeasure, solve_equilibrium, capacity, log_kernel_matrix

__all__ = [
    'SmoothCurve',
    'circle',
    'ellipse',
    'perturbed_circle',
    'curve_by_name',
    'from_samples',
    'spectral_derivatives',
    'trigonometric_resample',
    'resample',
    'read_curve_file',
    'write_curve_file',
    'CURVE_BUILDERS',
    'EquilibriumMeasure',
    'solve_equilibrium',
    'capacity',
    'log_kernel_matrix'
]
