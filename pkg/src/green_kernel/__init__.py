from .i_integral import (
    ISplit, split_point, split_I, eval_I, eval_I0, eval_Iinf, eval_Iinf_derivative,
    eval_dI, eval_I_direct, bessel_I, bessel_dI,
)
from .expansion_coeffs import (
    ExpansionCoeffs, expansion_coeffs, eval_I0_expansion, coefficient_audit,
    incomplete_gamma_tail, printed_g_m,
)
from .green_function import (
    kernel_prefactor, green_g0, eval_green_mehler, normal_derivative_g0,
    green_plane, normal_derivative_plane, adjoint_normal_derivative_plane,
)
from .singular_expansion import KernelExpansion, singular_expansion

__all__ = [
    'ISplit',
    'split_point',
    'split_I',
    'eval_I',
    'eval_I0',
    'eval_Iinf',
    'eval_Iinf_derivative',
    'eval_dI',
    'eval_I_direct',
    'bessel_I',
    'bessel_dI',
    'ExpansionCoeffs',
    'expansion_coeffs',
    'eval_I0_expansion',
    'coefficient_audit',
    'incomplete_gamma_tail',
    'printed_g_m',
    'kernel_prefactor',
    'green_g0',
    'eval_green_mehler',
    'normal_derivative_g0',
    'green_plane',
    'normal_derivative_plane',
    'adjoint_normal_derivative_plane',
    'KernelExpansion',
    'singular_expansion'
]
