"""
Layer potentials evaluated off the boundary.

    single_layer_potential:          (A u)(x)  = int G0(x, y) u(y) dS(y)
    double_layer_potential:          (B u)(x)  = int nu_y . (grad_y + i b A0(y)) G0(x, y) u(y) dS(y)
    normal_derivative_single_layer:  nu . (grad_x - i b A0(x)) (A u)(x)

Off the curve the kernels are smooth and the periodic trapezoid rule
converges geometrically, with a rate that degrades as x approaches the curve.
Targets closer than one mesh width are evaluated anyway, with a warning.
"""

import logging

import numpy as np

from capacity.smooth_curve import SmoothCurve
from green_kernel.green_function import adjoint_normal_derivative_plane, green_plane, normal_derivative_plane

logger = logging.getLogger(__name__)


def _targets(curve: SmoothCurve, x) -> np.ndarray:
    x = np.atleast_1d(np.asarray(x, dtype=complex))
    distance = curve.distance_to(x)
    if np.any(distance == 0):
        raise ValueError("layer potentials are evaluated off the boundary; a target lies on a node")
    close = distance < curve.mesh_width
    if np.any(close):
        logger.warning(f"{int(np.sum(close))} target(s) within one mesh width of '{curve.name}'; "
                       f"potential accuracy is degraded")
    return x


def _density(curve: SmoothCurve, density) -> np.ndarray:
    density = np.asarray(density, dtype=complex)
    if density.shape != (curve.n,):
        raise ValueError(f"density must have {curve.n} nodal values, got shape {density.shape}")
    return density


def _result(x_in, values):
    return complex(values[0]) if np.ndim(x_in) == 0 else values


def single_layer_potential(curve: SmoothCurve, b: float, density, x):
    """(A u)(x) at off-boundary points x (complex scalar or array)."""
    targets = _targets(curve, x)
    weighted = _density(curve, density) * curve.weights
    values = green_plane(b, targets[:, None], curve.points[None, :]) @ weighted
    return _result(x, values)


def double_layer_potential(curve: SmoothCurve, b: float, density, x):
    """(B u)(x) at off-boundary points x, with nu pointing into K."""
    targets = _targets(curve, x)
    weighted = _density(curve, density) * curve.weights
    kernel = adjoint_normal_derivative_plane(b, targets[:, None], curve.points[None, :], curve.omega_normal[None, :])
    return _result(x, kernel @ weighted)


def normal_derivative_single_layer(curve: SmoothCurve, b: float, density, x, nu):
    """
    Conormal derivative nu . (grad_x - i b A0(x)) of the single layer at x.

    Args:
        nu (complex | array): Unit direction(s) at the targets.
    """
    targets = _targets(curve, x)
    nu = np.broadcast_to(np.asarray(nu, dtype=complex), targets.shape)
    weighted = _density(curve, density) * curve.weights
    kernel = normal_derivative_plane(b, targets[:, None], nu[:, None], curve.points[None, :])
    return _result(x, kernel @ weighted)
