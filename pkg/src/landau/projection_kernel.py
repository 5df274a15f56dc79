"""
Integral kernel of the Landau-level projection P_q in the plane (d = 1).

K_q(z, w) = (b/2pi) L_{q-1}(b|z-w|^2/2) exp(-b|z-w|^2/4) exp(-i b (z ^ w)/2)

with L_n the Laguerre polynomial. The phase matches the gauge A0 = 1/2(-x2, x1)
used throughout the package, so K_q(., w) is annihilated by L - Lambda_q and
K_1(., w) exp(b|z|^2/4) is holomorphic.

The module also carries the finite-difference form of L used as an
independent oracle by the kernel and layer-potential checks.
"""

import logging

import numpy as np
from scipy.special import eval_laguerre, roots_legendre

from .magnetic_setup import MagneticSetup, LandauIndex, magnetic_phase, landau_level

logger = logging.getLogger(__name__)


def _require_plane(setup: MagneticSetup):
    if setup.d != 1:
        raise ValueError(f"projection kernel is implemented for d = 1 only, got d={setup.d}")


def projection_kernel(setup: MagneticSetup, q, z, w):
    """
    Evaluate K_q(z, w) of the projection onto the q-th Landau level.

    Args:
        setup (MagneticSetup): Field strength, must have d = 1.
        q (LandauIndex | int): Level index.
        z, w (complex | np.ndarray): Points of the plane (broadcastable).

    Returns:
        complex | np.ndarray: Kernel values.
    """
    _require_plane(setup)
    index = q if isinstance(q, LandauIndex) else LandauIndex(q)
    b = setup.b
    z = np.asarray(z, dtype=complex)
    w = np.asarray(w, dtype=complex)
    distance_sq = np.abs(z - w) ** 2
    radial = b / (2 * np.pi) * eval_laguerre(index.q - 1, b * distance_sq / 2) * np.exp(-b * distance_sq / 4)
    return radial * magnetic_phase(z, w, b)


def kernel_composition(setup: MagneticSetup, q, z, w, radius: float = 12.0,
                       radial_nodes: int = 200, angular_nodes: int = 256):
    """
    Numerically compose the kernel with itself: integral K_q(z,u) K_q(u,w) du.

    The integral runs over the disk |u - (z+w)/2| < radius with Gauss-Legendre
    nodes in the radius and the trapezoid rule in the angle. For P_q^2 = P_q
    the result equals K_q(z, w) up to the Gaussian tail outside the disk.
    """
    _require_plane(setup)
    center = 0.5 * (complex(z) + complex(w))
    nodes, weights = roots_legendre(radial_nodes)
    r = 0.5 * radius * (nodes + 1.0)
    wr = 0.5 * radius * weights
    theta = 2 * np.pi * np.arange(angular_nodes) / angular_nodes
    u = center + r[:, None] * np.exp(1j * theta)[None, :]
    integrand = projection_kernel(setup, q, z, u) * projection_kernel(setup, q, u, w)
    value = np.sum(wr[:, None] * r[:, None] * integrand) * (2 * np.pi / angular_nodes)
    logger.debug(f"Kernel composition on disk of radius {radius} with {radial_nodes}x{angular_nodes} nodes")
    return value


def apply_hamiltonian_fd(setup: MagneticSetup, u, z, h: float = 1e-3):
    """
    Apply L = -(grad - i b A0)^2 to a function of the plane by centered differences.

    Expanding the square with div A0 = 0 gives
    L u = -Lap u + 2 i b A0 . grad u + b^2 |A0|^2 u,
    discretized with the second-order five-point stencil.

    Args:
        setup (MagneticSetup): Field strength, must have d = 1.
        u (callable): Complex-valued function of a complex point (vectorized).
        z (complex | np.ndarray): Evaluation point(s).
        h (float): Stencil step.

    Returns:
        complex | np.ndarray: (L u)(z) with O(h^2) error.
    """
    _require_plane(setup)
    b = setup.b
    z = np.asarray(z, dtype=complex)
    center = u(z)
    east, west = u(z + h), u(z - h)
    north, south = u(z + 1j * h), u(z - 1j * h)

    laplacian = (east + west + north + south - 4 * center) / h ** 2
    du_dx1 = (east - west) / (2 * h)
    du_dx2 = (north - south) / (2 * h)

    x1, x2 = z.real, z.imag
    drift = -0.5 * x2 * du_dx1 + 0.5 * x1 * du_dx2
    potential_sq = 0.25 * (x1 ** 2 + x2 ** 2)
    return -laplacian + 2j * b * drift + b ** 2 * potential_sq * center


def eigen_residual(setup: MagneticSetup, q, z, w, h: float = 1e-3):
    """Return (L - Lambda_q) K_q(., w) at z by finite differences."""
    level = landau_level(setup, q)
    kernel = lambda point: projection_kernel(setup, q, point, w)
    return apply_hamiltonian_fd(setup, kernel, z, h) - level * kernel(z)
