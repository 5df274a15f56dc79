from .landau_basis import basis_labels, basis_function, basis_matrix, laguerre_mp, level_density
from .radial_spectrum import (
    ToeplitzSpectrum, radial_eigenvalue, radial_spectrum, lowest_level_eigenvalue, check_monotone_tail,
)
from .galerkin_spectrum import (
    DiskRegion, CurveRegion, basis_cutoff, basis_tail_mass, galerkin_matrix, galerkin_spectrum,
)
from .spectral_asymptotics import (
    CountingQuery, GrowthFit, counting, capacity_limit_predictor, limit_sequence, limit_frame,
    counting_predictor, counting_study, fit_growth_exponent, sandwich_limits,
)
from .tensor_spectrum import tensor_spectrum_d2

__all__ = [
    'basis_labels',
    'basis_function',
    'basis_matrix',
    'laguerre_mp',
    'level_density',
    'ToeplitzSpectrum',
    'radial_eigenvalue',
    'radial_spectrum',
    'lowest_level_eigenvalue',
    'check_monotone_tail',
    'DiskRegion',
    'CurveRegion',
    'basis_cutoff',
    'basis_tail_mass',
    'galerkin_matrix',
    'galerkin_spectrum',
    'CountingQuery',
    'GrowthFit',
    'counting',
    'capacity_limit_predictor',
    'limit_sequence',
    'limit_frame',
    'counting_predictor',
    'counting_study',
    'fit_growth_exponent',
    'sandwich_limits',
    'tensor_spectrum_d2'
]
