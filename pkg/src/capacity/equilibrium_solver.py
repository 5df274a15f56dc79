"""
Equilibrium measure and logarithmic capacity of a planar compact set.

The equilibrium density mu (with respect to arc length) of K solves

    int_{dK} log(1/|x - y|) mu(y) dS(y) = V   on dK,      int mu dS = 1,

and Cap(K) = exp(-V). The log kernel is split as
-1/2 log(4 sin^2((t-s)/2)) |x'(s)| + smooth, discretized with the spectral
log weights, and the side condition borders the linear system with one
extra row and column.
"""

import logging
from dataclasses import dataclass

import numpy as np
from scipy import linalg

from boundary_ops.log_quadrature import kress_matrix, log_sine_squared
from config import Config
from core.errors import DegenerateCapacityError
from .smooth_curve import SmoothCurve

logger = logging.getLogger(__name__)


@dataclass
class EquilibriumMeasure:
    """
    Discrete equilibrium measure on a curve.

    Attributes:
        density (np.ndarray): mu(x(t_i)) with respect to arc length.
        robin_constant (float): The constant potential V.
        n (int): Node count.
        residual (float): Max-norm residual of the bordered system.
        total_mass (float): Trapezoid value of int mu dS.
        nonnegative (bool): Whether all density values are >= 0 (up to rounding).
        condition (float): Condition number of the bordered matrix that was solved.
        rescaled (bool): Whether the curve had to be rescaled by 2.
    """
    density: np.ndarray
    robin_constant: float
    n: int
    residual: float
    total_mass: float
    nonnegative: bool
    condition: float
    rescaled: bool = False

    @property
    def capacity(self) -> float:
        return float(np.exp(-self.robin_constant))


def log_kernel_matrix(curve: SmoothCurve) -> np.ndarray:
    """Nystrom matrix of u -> int log(1/|x - y|) u(y) dS(y) at the nodes."""
    n = curve.n
    speed = curve.speed
    difference = curve.points[:, None] - curve.points[None, :]
    log_sine = log_sine_squared(n)
    with np.errstate(divide='ignore', invalid='ignore'):
        smooth = -0.5 * (np.log(np.abs(difference) ** 2) - log_sine) * speed[None, :]
    np.fill_diagonal(smooth, -0.5 * np.log(speed ** 2) * speed)
    singular = np.broadcast_to(-0.5 * speed[None, :], (n, n))
    return kress_matrix(singular, smooth)


def _bordered_system(curve: SmoothCurve):
    n = curve.n
    system = np.zeros((n + 1, n + 1))
    system[:n, :n] = log_kernel_matrix(curve)
    system[:n, n] = -1.0
    system[n, :n] = curve.weights
    rhs = np.zeros(n + 1)
    rhs[n] = 1.0
    return system, rhs


def _solve(curve: SmoothCurve):
    """Solution, condition number and residual; no solution when the system is ill-conditioned."""
    system, rhs = _bordered_system(curve)
    condition = float(np.linalg.cond(system))
    if not (np.isfinite(condition) and condition <= Config.SINGULAR_CONDITION):
        return None, condition, float('inf')
    solution = linalg.solve(system, rhs)
    residual = float(np.max(np.abs(system @ solution - rhs)))
    return solution, condition, residual


def solve_equilibrium(curve: SmoothCurve) -> EquilibriumMeasure:
    """
    Solve for the equilibrium density and the Robin constant of a curve.

    Args:
        curve (SmoothCurve): Simple closed curve bounding K.

    Returns:
        EquilibriumMeasure: Density, Robin constant V and diagnostics.

    Raises:
        DegenerateCapacityError: If the system stays ill-conditioned after rescaling.
    """
    solution, condition, residual = _solve(curve)
    rescaled = False
    if solution is None:
        # Cap(2K) = 2 Cap(K): V shifts by -log 2 and the density halves
        logger.warning(f"Equilibrium system for '{curve.name}' ill-conditioned (cond={condition:.3g}); rescaling by 2")
        solution, condition, residual = _solve(curve.scaled(2.0))
        if solution is None:
            raise DegenerateCapacityError(f"equilibrium system for '{curve.name}' is singular "
                                          f"(cond={condition:.3g}) after rescaling", module=__name__)
        solution[:curve.n] *= 2.0
        solution[curve.n] += np.log(2.0)
        rescaled = True

    density = solution[:curve.n]
    robin_constant = float(solution[curve.n])
    nonnegative = bool(np.min(density) >= -1e-12 * np.max(np.abs(density)))
    if not nonnegative:
        logger.warning(f"Equilibrium density on '{curve.name}' has negative values (min {np.min(density):.3g})")
    measure = EquilibriumMeasure(
        density=density,
        robin_constant=robin_constant,
        n=curve.n,
        residual=residual,
        total_mass=float(np.sum(density * curve.weights)),
        nonnegative=nonnegative,
        condition=float(condition),
        rescaled=rescaled,
    )
    logger.debug(f"Equilibrium on '{curve.name}': V={robin_constant:.15g}, cond={condition:.3g}, residual={residual:.2e}")
    return measure


def capacity(curve: SmoothCurve) -> float:
    """Logarithmic capacity exp(-V) of the compact set bounded by curve."""
    return solve_equilibrium(curve).capacity
