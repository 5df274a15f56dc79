"""
Nystrom matrices of the boundary layer operators of the plane Landau Hamiltonian.

    (A u)(x) = int G0(x, y) u(y) dS(y)
    (B u)(x) = int nu_y . (grad_y + i b A0(y)) G0(x, y) u(y) dS(y)

with nu the unit normal pointing into the compact set K. Both kernels are
split as M1(t, tau) log(4 sin^2((t - tau)/2)) + M2(t, tau), using

    K_0(s) = -I_0(s) log s + smooth,     K_1(s) = 1/s + I_1(s) log s + smooth,

and discretized with the spectral log weights of log_quadrature. The
diagonal values of M2 are the limits of the smooth remainder.
"""

import logging
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
import pandas as pd
from scipy import special

from capacity.curve_library import resample
from capacity.smooth_curve import SmoothCurve
from green_kernel.green_function import adjoint_normal_derivative_plane, green_plane
from landau.magnetic_setup import magnetic_phase
from .log_quadrature import kress_matrix, log_sine_squared, log_weights, trapezoid_weight

logger = logging.getLogger(__name__)

OPERATOR_KINDS = ('A', 'B', 'T_plus', 'T_minus', 'DtR_interior', 'DtR_exterior')


@dataclass(frozen=True)
class RobinCoefficient:
    """Real samples tau(t_i) of the Robin coefficient on the curve nodes."""
    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values)
        if np.iscomplexobj(values):
            if np.any(np.imag(values) != 0):
                raise ValueError("Robin coefficient must be real-valued")
            values = np.real(values)
        values = values.astype(float)
        if values.ndim != 1 or not np.all(np.isfinite(values)):
            raise ValueError("Robin coefficient must be a finite 1-D array")
        object.__setattr__(self, 'values', values)

    @classmethod
    def constant(cls, value: float, n: int) -> 'RobinCoefficient':
        return cls(np.full(n, float(value)))

    @classmethod
    def from_function(cls, curve: SmoothCurve, function) -> 'RobinCoefficient':
        """Sample tau(t) at the curve nodes."""
        return cls(np.broadcast_to(function(curve.t), (curve.n,)).copy())

    @property
    def n(self) -> int:
        return self.values.size

    def shifted(self, epsilon: float) -> 'RobinCoefficient':
        return RobinCoefficient(self.values + epsilon)


@dataclass
class BoundaryOperatorMatrix:
    """
    Discretized boundary operator on the nodes of a curve.

    Attributes:
        kind (str): One of A, B, T_plus, T_minus, DtR_interior, DtR_exterior.
        matrix (np.ndarray): Complex n x n matrix acting on nodal values.
        curve (SmoothCurve): Discretized boundary.
        b (float): Field strength.
        tau (RobinCoefficient, optional): Robin coefficient, for the T and DtR kinds.
    """
    kind: str
    matrix: np.ndarray
    curve: SmoothCurve
    b: float
    tau: Optional[RobinCoefficient] = field(default=None)

    def __post_init__(self):
        if self.kind not in OPERATOR_KINDS:
            raise ValueError(f"unknown operator kind '{self.kind}', expected one of {OPERATOR_KINDS}")
        if self.matrix.shape != (self.curve.n, self.curve.n):
            raise ValueError(f"matrix shape {self.matrix.shape} does not match {self.curve.n} nodes")
        if not np.all(np.isfinite(self.matrix)):
            raise ValueError(f"operator {self.kind} has non-finite entries")

    @property
    def n(self) -> int:
        return self.curve.n

    def apply(self, density) -> np.ndarray:
        return self.matrix @ np.asarray(density, dtype=complex)

    def symmetrized(self) -> np.ndarray:
        """D^{1/2} M D^{-1/2} with D = diag|x'|; Hermitian iff the kernel is."""
        root = np.sqrt(self.curve.speed)
        return root[:, None] * self.matrix / root[None, :]

    def hermitian_defect(self) -> float:
        """Largest entry of |S - S^H| for the symmetrized matrix S."""
        symmetric = self.symmetrized()
        return float(np.max(np.abs(symmetric - symmetric.conj().T)))

    def singular_values(self) -> np.ndarray:
        return np.linalg.svd(self.symmetrized(), compute_uv=False)

    def condition(self) -> float:
        return float(np.linalg.cond(self.matrix))

    def to_frame(self) -> pd.DataFrame:
        """Row-major table of entries: row, col, re, im."""
        n = self.n
        rows, cols = np.divmod(np.arange(n * n), n)
        flat = self.matrix.ravel()
        return pd.DataFrame({'row': rows, 'col': cols, 're': flat.real, 'im': flat.imag})


def _prepare(curve: SmoothCurve, b: float, n: Optional[int]) -> SmoothCurve:
    if not b > 0:
        raise ValueError(f"field strength must be positive, got b={b}")
    if n is not None and n != curve.n:
        if n < 4 or n % 2 != 0:
            raise ValueError(f"node count must be even and at least 4, got n={n}")
        curve = resample(curve, n)
    return curve


def _geometry(curve: SmoothCurve, b: float, rows):
    x = curve.points[rows][:, None]
    y = curve.points[None, :]
    separation = y - x
    s = b * np.abs(separation) ** 2 / 4
    phase = magnetic_phase(x, y, b)
    log_sine = log_sine_squared(curve.n)[rows]
    diagonal = (np.arange(curve.n)[None, :] == np.asarray(rows)[:, None])
    return x, y, separation, s, phase, log_sine, diagonal


def _split_rows(kernel, singular, log_sine, diagonal, diagonal_values, rows):
    with np.errstate(invalid='ignore'):
        smooth = kernel - singular * log_sine
    smooth[diagonal] = diagonal_values[np.asarray(rows)]
    return singular, smooth


def _kress_rows(singular, smooth, n, rows):
    """Rows of R * M1 + (2 pi/n) * M2 for a subset of target nodes."""
    if len(rows) == n:
        return kress_matrix(singular, smooth)
    return log_weights(n)[rows] * singular + trapezoid_weight(n) * smooth


def single_layer_rows(curve: SmoothCurve, b: float, rows=None) -> np.ndarray:
    """Rows of the Nystrom matrix of A at the given target nodes (all by default)."""
    rows = np.arange(curve.n) if rows is None else np.atleast_1d(rows)
    x, y, separation, s, phase, log_sine, diagonal = _geometry(curve, b, rows)
    speed = curve.speed[None, :]
    with np.errstate(divide='ignore', invalid='ignore'):
        kernel = green_plane(b, x, y) * speed
    singular = -special.i0(s) / (4 * np.pi) * phase * speed
    speed_sq = curve.speed ** 2
    diagonal_values = (-np.log(b * speed_sq / 8) - np.euler_gamma) * curve.speed / (4 * np.pi)
    singular, smooth = _split_rows(kernel, singular, log_sine, diagonal, diagonal_values.astype(complex), rows)
    return _kress_rows(singular, smooth, curve.n, rows)


def double_layer_rows(curve: SmoothCurve, b: float, rows=None) -> np.ndarray:
    """Rows of the Nystrom matrix of B at the given target nodes (all by default)."""
    rows = np.arange(curve.n) if rows is None else np.atleast_1d(rows)
    x, y, separation, s, phase, log_sine, diagonal = _geometry(curve, b, rows)
    nu = curve.omega_normal[None, :]
    speed = curve.speed[None, :]
    with np.errstate(divide='ignore', invalid='ignore'):
        kernel = adjoint_normal_derivative_plane(b, x, y, nu) * speed
    # log coefficients of K_1 and K_0 inside the kernel
    normal_part = np.real(np.conj(nu) * separation)
    gauge_part = np.real(np.conj(nu) * 0.5j * separation)
    singular = phase * (-b / (8 * np.pi) * special.i1(s) * normal_part
                        - 1j * b / (4 * np.pi) * special.i0(s) * gauge_part) * speed
    bending = np.real(np.conj(curve.omega_normal) * curve.second_derivative) / curve.speed ** 2
    diagonal_values = bending * curve.speed / (4 * np.pi)
    singular, smooth = _split_rows(kernel, singular, log_sine, diagonal, diagonal_values.astype(complex), rows)
    return _kress_rows(singular, smooth, curve.n, rows)


def assemble_A(curve: SmoothCurve, b: float, n: Optional[int] = None) -> BoundaryOperatorMatrix:
    """
    Nystrom matrix of the single layer operator A.

    Args:
        curve (SmoothCurve): Boundary of K.
        b (float): Field strength.
        n (int, optional): Node count; the curve is resampled when it differs.
    """
    curve = _prepare(curve, b, n)
    matrix = single_layer_rows(curve, b)
    logger.debug(f"Assembled A on '{curve.name}' with n={curve.n}, b={b}")
    return BoundaryOperatorMatrix('A', matrix, curve, b)


def assemble_B(curve: SmoothCurve, b: float, n: Optional[int] = None) -> BoundaryOperatorMatrix:
    """Nystrom matrix of the double layer operator B (principal value on the curve)."""
    curve = _prepare(curve, b, n)
    matrix = double_layer_rows(curve, b)
    logger.debug(f"Assembled B on '{curve.name}' with n={curve.n}, b={b}")
    return BoundaryOperatorMatrix('B', matrix, curve, b)
