from .magnetic_setup import (
    MagneticSetup, LandauIndex, landau_level, as_complex_point,
    magnetic_potential, wedge, magnetic_phase,
)
from .polynomial_gaussian import (
    PolynomialGaussian, apply_annihilation, apply_creation, apply_hamiltonian,
    commutator, gaussian_inner_product,
)
from .projection_kernel import projection_kernel, kernel_composition, apply_hamiltonian_fd, eigen_residual

__all__ = [
    'MagneticSetup',
    'LandauIndex',
    'landau_level',
    'as_complex_point',
    'magnetic_potential',
    'wedge',
    'magnetic_phase',
    'PolynomialGaussian',
    'apply_annihilation',
    'apply_creation',
    'apply_hamiltonian',
    'commutator',
    'gaussian_inner_product',
    'projection_kernel',
    'kernel_composition',
    'apply_hamiltonian_fd',
    'eigen_residual'
]
