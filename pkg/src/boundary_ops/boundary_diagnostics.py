"""
Checks of the discretized boundary calculus.

- jump_test: one-sided limits of the layer potentials along the normal, by
  polynomial extrapolation in the distance h to h = 0
- representation_check: Green representation of u = G0(., y0) on one side
- generic_sweep: conditioning of T_{+/-} for tau + eps over a grid of eps
- singular_value_slope, scaled_min_singular_value, self_convergence,
  mode_norms: spectral facts of A and B
"""

import logging
from dataclasses import asdict, dataclass
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np
import pandas as pd
from scipy.interpolate import BarycentricInterpolator

from capacity.curve_library import resample, trigonometric_resample
from capacity.smooth_curve import SmoothCurve
from config import Config
from core.errors import ExtrapolationError
from green_kernel.green_function import green_plane, normal_derivative_plane
from .layer_operators import (
    BoundaryOperatorMatrix, RobinCoefficient, assemble_A, assemble_B, double_layer_rows, single_layer_rows,
)
from .layer_potentials import double_layer_potential, normal_derivative_single_layer, single_layer_potential
from .robin_maps import robin_operators

logger = logging.getLogger(__name__)

# test points of representation_check keep this distance from the curve
REPRESENTATION_DISTANCE = 0.2


# --- jump relations ---

@dataclass
class JumpReport:
    """
    One-sided limits at a boundary node x0 and the jumps between them.

    Expected: A_interior = A_exterior = (A u)(x0);
    B_interior = u/2 + (B u)(x0), B_exterior = -u/2 + (B u)(x0);
    dA_exterior - dA_interior = u(x0).
    """
    index: int
    density_value: complex
    A_node: complex
    B_node: complex
    A_interior: complex
    A_exterior: complex
    B_interior: complex
    B_exterior: complex
    dA_interior: complex
    dA_exterior: complex

    @property
    def single_layer_jump(self) -> complex:
        return self.A_exterior - self.A_interior

    @property
    def double_layer_jump(self) -> complex:
        return self.B_interior - self.B_exterior

    @property
    def normal_derivative_jump(self) -> complex:
        return self.dA_exterior - self.dA_interior

    def deviations(self) -> Dict[str, float]:
        u = self.density_value
        return {
            'single_layer_continuity': abs(self.single_layer_jump),
            'single_layer_trace': max(abs(self.A_interior - self.A_node), abs(self.A_exterior - self.A_node)),
            'double_layer_jump': abs(self.double_layer_jump - u),
            'double_layer_interior': abs(self.B_interior - (0.5 * u + self.B_node)),
            'double_layer_exterior': abs(self.B_exterior - (-0.5 * u + self.B_node)),
            'normal_derivative_jump': abs(self.normal_derivative_jump - u),
        }

    def max_deviation(self) -> float:
        return max(self.deviations().values())

    def to_dict(self) -> dict:
        data = {key: [value.real, value.imag] if isinstance(value, complex) else value
                for key, value in asdict(self).items()}
        data['deviations'] = self.deviations()
        return data


def extrapolate_to_zero(distances, values, tolerance: Optional[float] = None) -> complex:
    """
    Value at h = 0 of the polynomial through (h_k, f(h_k)).

    Raises:
        ExtrapolationError: If dropping the largest h changes the result by more than tolerance.
    """
    tolerance = tolerance or Config.EXTRAPOLATION_TOL
    distances = np.asarray(distances, dtype=float)
    values = np.asarray(values, dtype=complex)
    order = np.argsort(distances)
    distances, values = distances[order], values[order]
    if distances.size < 3:
        raise ValueError("extrapolation needs at least three distances")
    full = complex(BarycentricInterpolator(distances, values)(0.0))
    reduced = complex(BarycentricInterpolator(distances[:-1], values[:-1])(0.0))
    if abs(full - reduced) > tolerance * max(1.0, abs(full)):
        raise ExtrapolationError(f"extrapolated limit not settled: {full:.10g} vs {reduced:.10g}", module=__name__)
    return full


def _sample_density(curve: SmoothCurve, density, target: SmoothCurve) -> np.ndarray:
    if callable(density):
        return np.broadcast_to(np.asarray(density(target.t), dtype=complex), (target.n,)).copy()
    density = np.asarray(density, dtype=complex)
    if density.shape != (curve.n,):
        raise ValueError(f"density must have {curve.n} nodal values, got shape {density.shape}")
    return trigonometric_resample(density, target.n)


def jump_test(curve: SmoothCurve, b: float, density, index: int, distances: Optional[Sequence[float]] = None,
              n: Optional[int] = None) -> JumpReport:
    """
    One-sided limits of the layer potentials at node index along the normal.

    Args:
        curve (SmoothCurve): Boundary of K.
        b (float): Field strength.
        density (callable | array): u(t), or its values on the curve nodes.
        index (int): Node of the curve where the limits are taken.
        distances (sequence, optional): Approach distances h_k.
        n (int, optional): Node count for the potentials, rounded up to a multiple of curve.n.
    """
    if not 0 <= index < curve.n:
        raise ValueError(f"node index {index} out of range for {curve.n} nodes")
    distances = np.asarray(distances if distances is not None else Config.JUMP_DISTANCES, dtype=float)
    factor = int(np.ceil((n or Config.JUMP_NODES) / curve.n))
    fine = resample(curve, curve.n * factor)
    node = index * factor
    u = _sample_density(curve, density, fine)

    x0 = fine.points[node]
    nu = fine.omega_normal[node]
    inside = x0 + distances * nu
    outside = x0 - distances * nu
    report = JumpReport(
        index=index,
        density_value=complex(u[node]),
        A_node=complex(single_layer_rows(fine, b, node)[0] @ u),
        B_node=complex(double_layer_rows(fine, b, node)[0] @ u),
        A_interior=extrapolate_to_zero(distances, single_layer_potential(fine, b, u, inside)),
        A_exterior=extrapolate_to_zero(distances, single_layer_potential(fine, b, u, outside)),
        B_interior=extrapolate_to_zero(distances, double_layer_potential(fine, b, u, inside)),
        B_exterior=extrapolate_to_zero(distances, double_layer_potential(fine, b, u, outside)),
        dA_interior=extrapolate_to_zero(distances, normal_derivative_single_layer(fine, b, u, inside, nu)),
        dA_exterior=extrapolate_to_zero(distances, normal_derivative_single_layer(fine, b, u, outside, nu)),
    )
    logger.debug(f"Jump test on '{curve.name}' at node {index}: max deviation {report.max_deviation():.2e}")
    return report


# --- Green representation ---

@dataclass
class RepresentationReport:
    side: str
    source: complex
    n: int
    points: int
    max_residual: float

    def to_dict(self) -> dict:
        return {'side': self.side, 'source': [self.source.real, self.source.imag], 'n': self.n,
                'points': self.points, 'max_residual': self.max_residual}


def _default_test_points(curve: SmoothCurve, side: str, count: int = 16) -> np.ndarray:
    center = curve.centroid()
    scale = 0.5 if side == 'interior' else 1.5
    nodes = curve.points[:: max(1, curve.n // count)]
    return center + scale * (nodes - center)


def source_side_problem(curve: SmoothCurve, y0: complex, side: str) -> Optional[str]:
    """Why y0 cannot serve as the source of the {side} representation, or None."""
    if side not in ('interior', 'exterior'):
        return f"side must be 'interior' or 'exterior', got '{side}'"
    y0 = complex(y0)
    source_inside = bool(curve.contains(y0)[0])
    if curve.distance_to(y0)[0] <= curve.mesh_width or source_inside == (side == 'interior'):
        return (f"source {y0:g} must lie strictly {'outside' if side == 'interior' else 'inside'} "
                f"'{curve.name}' for the {side} representation")
    return None


def representation_check(curve: SmoothCurve, b: float, y0: complex, side: str, n: Optional[int] = None,
                         test_points=None) -> RepresentationReport:
    """
    Compare the Green representation of u = G0(., y0) with u itself.

    interior (y0 outside K): u = B gamma u - A d_N u in the interior of K
    exterior (y0 inside K):  u = A d_N u - B gamma u in the exterior

    Raises:
        ValueError: If y0 is not strictly on the side opposite to the tested one.
    """
    if n is not None:
        curve = resample(curve, n)
    y0 = complex(y0)
    problem = source_side_problem(curve, y0, side)
    if problem:
        raise ValueError(problem)

    points = _default_test_points(curve, side) if test_points is None else np.atleast_1d(test_points)
    points = np.asarray(points, dtype=complex)
    keep = (curve.contains(points) == (side == 'interior')) & (curve.distance_to(points) >= REPRESENTATION_DISTANCE)
    points = points[keep]
    if points.size == 0:
        raise ValueError(f"no test points on the {side} side at distance >= {REPRESENTATION_DISTANCE}")

    trace = green_plane(b, curve.points, y0)
    normal_trace = normal_derivative_plane(b, curve.points, curve.omega_normal, y0)
    single = single_layer_potential(curve, b, normal_trace, points)
    double = double_layer_potential(curve, b, trace, points)
    represented = double - single if side == 'interior' else single - double
    residual = float(np.max(np.abs(represented - green_plane(b, points, y0))))
    logger.debug(f"Representation ({side}) on '{curve.name}', n={curve.n}: max residual {residual:.2e}")
    return RepresentationReport(side=side, source=y0, n=curve.n, points=int(points.size), max_residual=residual)


# --- genericity of the Robin coefficient ---

@dataclass
class GenericSweep:
    frame: pd.DataFrame
    singular_epsilons: List[float]

    @property
    def singular_count(self) -> int:
        return len(self.singular_epsilons)


def generic_sweep(curve: SmoothCurve, b: float, tau: Optional[RobinCoefficient] = None,
                  epsilons: Optional[Sequence[float]] = None, n: Optional[int] = None,
                  A: Optional[BoundaryOperatorMatrix] = None,
                  B: Optional[BoundaryOperatorMatrix] = None) -> GenericSweep:
    """
    Condition numbers of T_{+/-} for tau + eps over a grid of eps.

    Singular values of eps are data, not errors: they are listed in the
    result when either condition number exceeds Config.SINGULAR_CONDITION.
    """
    A = assemble_A(curve, b, n) if A is None else A
    B = assemble_B(curve, b, n) if B is None else B
    tau = RobinCoefficient.constant(0.0, A.n) if tau is None else tau
    epsilons = np.linspace(-1.0, 1.0, Config.SWEEP_POINTS) if epsilons is None else np.asarray(epsilons, dtype=float)

    rows = []
    for epsilon in epsilons:
        T_plus, T_minus = robin_operators(A, B, tau.shifted(epsilon))
        cond_plus, cond_minus = T_plus.condition(), T_minus.condition()
        rows.append({
            'epsilon': float(epsilon),
            'cond_plus': cond_plus,
            'cond_minus': cond_minus,
            'singular': bool(not (cond_plus <= Config.SINGULAR_CONDITION and cond_minus <= Config.SINGULAR_CONDITION)),
        })
    frame = pd.DataFrame(rows, columns=['epsilon', 'cond_plus', 'cond_minus', 'singular'])
    singular = frame.loc[frame['singular'], 'epsilon'].tolist()
    logger.info(f"Genericity sweep on '{A.curve.name}' (n={A.n}): {len(singular)} of {len(frame)} values singular")
    return GenericSweep(frame=frame, singular_epsilons=singular)


# --- spectral facts ---

def _index_window(n: int, k_min: int, k_max: Optional[int]):
    k_max = n // 4 if k_max is None else k_max
    if not 1 <= k_min < k_max <= n:
        raise ValueError(f"invalid singular value window [{k_min}, {k_max}] for n={n}")
    return np.arange(k_min, k_max + 1)


def singular_value_slope(operator: BoundaryOperatorMatrix, k_min: int = 8, k_max: Optional[int] = None) -> float:
    """Slope of log sigma_k against log k for k in [k_min, k_max] (default n/4)."""
    sigma = operator.singular_values()
    k = _index_window(operator.n, k_min, k_max)
    slope, _ = np.polyfit(np.log(k), np.log(sigma[k - 1]), 1)
    return float(slope)


def scaled_min_singular_value(operator: BoundaryOperatorMatrix, k_max: Optional[int] = None) -> float:
    """min over k <= k_max of k sigma_k, bounded below for an elliptic operator of order -1."""
    sigma = operator.singular_values()
    k = _index_window(operator.n, 1, k_max)
    return float(np.min(k * sigma[k - 1]))


def self_convergence(curve: SmoothCurve, b: float, kind: str, density: Callable, n: int) -> float:
    """
    Max difference of the operator applied to density at n and 2n nodes,
    compared at the common nodes.
    """
    assemble = {'A': assemble_A, 'B': assemble_B}.get(kind)
    if assemble is None:
        raise ValueError(f"self-convergence is defined for A and B, got '{kind}'")
    coarse = assemble(curve, b, n)
    fine = assemble(curve, b, 2 * n)
    coarse_values = coarse.apply(density(coarse.curve.t))
    fine_values = fine.apply(density(fine.curve.t))[::2]
    return float(np.max(np.abs(coarse_values - fine_values)))


def mode_norms(operator: BoundaryOperatorMatrix, modes: Sequence[int]) -> np.ndarray:
    """||M u_k|| / ||u_k|| for the Fourier modes u_k = exp(i k t) on the nodes."""
    t = operator.curve.t
    ratios = []
    for k in modes:
        mode = np.exp(1j * k * t)
        ratios.append(np.linalg.norm(operator.apply(mode)) / np.linalg.norm(mode))
    return np.asarray(ratios)
