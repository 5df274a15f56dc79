# log_quadrature has no package dependencies and is imported by capacity; keep it first
from .log_quadrature import log_weights, log_sine_squared, trapezoid_weight, kress_matrix
from .layer_operators import (
    BoundaryOperatorMatrix, RobinCoefficient, assemble_A, assemble_B, single_layer_rows, double_layer_rows,
    OPERATOR_KINDS,
)
from .layer_potentials import single_layer_potential, double_layer_potential, normal_derivative_single_layer
from .robin_maps import robin_operators, dtr_maps, dtr_residuals
from .boundary_diagnostics import (
    JumpReport, RepresentationReport, GenericSweep, extrapolate_to_zero, jump_test, representation_check,
    source_side_problem, generic_sweep, singular_value_slope, scaled_min_singular_value, self_convergence,
    mode_norms,
)

__all__ = [
    'log_weights',
    'log_sine_squared',
    'trapezoid_weight',
    'kress_matrix',
    'BoundaryOperatorMatrix',
    'RobinCoefficient',
    'assemble_A',
    'assemble_B',
    'single_layer_rows',
    'double_layer_rows',
    'OPERATOR_KINDS',
    'single_layer_potential',
    'double_layer_potential',
    'normal_derivative_single_layer',
    'robin_operators',
    'dtr_maps',
    'dtr_residuals',
    'JumpReport',
    'RepresentationReport',
    'GenericSweep',
    'extrapolate_to_zero',
    'jump_test',
    'representation_check',
    'source_side_problem',
    'generic_sweep',
    'singular_value_slope',
    'scaled_min_singular_value',
    'self_convergence',
    'mode_norms'
]
