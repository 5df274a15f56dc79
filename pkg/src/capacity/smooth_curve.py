"""
Smooth closed planar curves sampled on a uniform parameter grid.

A SmoothCurve stores x(t_i), x'(t_i) and x''(t_i) at t_i = 2 pi i/n as
complex numbers. It is always oriented counterclockwise, so the compact set
K lies to the left of the tangent; ``outward_normal`` points out of K and
``omega_normal`` (the normal used by the boundary operators) points from the
exterior domain into K.
"""

import logging
from typing import Optional

import numpy as np

logger = logging.getLogger(__name__)

# rows of the pairwise segment test processed at once
_SEGMENT_CHUNK = 512


class SmoothCurve:
    """
    Periodic parameterization of a simple closed curve.

    Attributes:
        t (np.ndarray): Uniform parameter nodes on [0, 2 pi).
        points (np.ndarray): x(t_i) as complex numbers.
        derivative (np.ndarray): x'(t_i).
        second_derivative (np.ndarray): x''(t_i).
        name (str): Label used in reports.
    """

    def __init__(self, points, derivative, second_derivative, name: str = 'curve', validate: bool = True):
        """
        Initialize the curve from samples.

        Args:
            points, derivative, second_derivative (array-like): Complex samples at t_i = 2 pi i/n.
            name (str): Label used in reports.
            validate (bool): Check that n is even, the speed positive and the curve simple.

        Raises:
            ValueError: If a curve invariant is violated.
        """
        self.points = np.asarray(points, dtype=complex)
        self.derivative = np.asarray(derivative, dtype=complex)
        self.second_derivative = np.asarray(second_derivative, dtype=complex)
        self.name = name
        n = self.points.size
        if self.derivative.shape != (n,) or self.second_derivative.shape != (n,):
            raise ValueError("points and derivatives must be 1-D arrays of equal length")
        self.t = 2 * np.pi * np.arange(n) / n

        if validate:
            self._validate()
        if self.signed_area() < 0:
            self._reverse_orientation()

    @classmethod
    def from_function(cls, x, dx, ddx, n: int, name: str = 'curve'):
        """
        Sample a parameterization given by callables of t.

        Args:
            x, dx, ddx (callable): x(t), x'(t), x''(t) returning complex values.
            n (int): Number of nodes (even).
        """
        t = 2 * np.pi * np.arange(n) / n
        return cls(x(t), dx(t), ddx(t), name=name)

    @property
    def n(self) -> int:
        return self.points.size

    @property
    def speed(self) -> np.ndarray:
        return np.abs(self.derivative)

    @property
    def unit_tangent(self) -> np.ndarray:
        return self.derivative / self.speed

    @property
    def outward_normal(self) -> np.ndarray:
        """Unit normal pointing out of the enclosed compact set K."""
        return -1j * self.unit_tangent

    @property
    def omega_normal(self) -> np.ndarray:
        """Unit normal pointing out of the exterior domain, i.e. into K."""
        return 1j * self.unit_tangent

    @property
    def weights(self) -> np.ndarray:
        """Trapezoid weights for arc length: (2 pi/n) |x'(t_i)|."""
        return 2 * np.pi / self.n * self.speed

    @property
    def curvature(self) -> np.ndarray:
        return np.imag(np.conj(self.derivative) * self.second_derivative) / self.speed ** 3

    @property
    def mesh_width(self) -> float:
        return float(np.max(np.abs(np.roll(self.points, -1) - self.points)))

    def length(self) -> float:
        return float(np.sum(self.weights))

    def signed_area(self) -> float:
        """(1/2) closed integral of (x1 dx2 - x2 dx1), positive for counterclockwise curves."""
        return float(0.5 * np.sum(np.imag(np.conj(self.points) * self.derivative)) * 2 * np.pi / self.n)

    def area(self) -> float:
        return abs(self.signed_area())

    def centroid(self) -> complex:
        return complex(np.sum(self.points * self.weights) / np.sum(self.weights))

    def circumradius(self, center: Optional[complex] = None) -> float:
        """Largest distance from center (default: centroid) to the nodes."""
        center = self.centroid() if center is None else center
        return float(np.max(np.abs(self.points - center)))

    def contains(self, z) -> np.ndarray:
        """Whether points lie strictly inside the polygon through the nodes (winding number)."""
        z = np.atleast_1d(np.asarray(z, dtype=complex))
        vertices = self.points[None, :] - z[:, None]
        turns = np.angle(np.roll(vertices, -1, axis=1) / vertices)
        return np.abs(np.sum(turns, axis=1)) > np.pi

    def distance_to(self, z) -> np.ndarray:
        """Distance from points to the nearest node."""
        z = np.atleast_1d(np.asarray(z, dtype=complex))
        return np.min(np.abs(z[:, None] - self.points[None, :]), axis=1)

    # --- rigid motions and scaling ---

    def scaled(self, factor: float) -> 'SmoothCurve':
        if not factor > 0:
            raise ValueError("scaling factor must be positive")
        return SmoothCurve(factor * self.points, factor * self.derivative, factor * self.second_derivative,
                           name=f"{self.name}*{factor:g}", validate=False)

    def translated(self, shift: complex) -> 'SmoothCurve':
        return SmoothCurve(self.points + shift, self.derivative, self.second_derivative,
                           name=f"{self.name}+({shift:g})", validate=False)

    def rotated(self, angle: float) -> 'SmoothCurve':
        rotation = np.exp(1j * angle)
        return SmoothCurve(rotation * self.points, rotation * self.derivative, rotation * self.second_derivative,
                           name=f"{self.name}@{angle:g}", validate=False)

    # --- validation ---

    def _validate(self):
        if self.n < 4 or self.n % 2 != 0:
            raise ValueError(f"node count must be even and at least 4, got n={self.n}")
        if not np.all(np.isfinite(self.points)) or not np.all(np.isfinite(self.derivative)):
            raise ValueError("curve samples must be finite")
        if np.min(self.speed) <= 0:
            raise ValueError("curve speed must be positive everywhere")
        if not self.is_simple():
            raise ValueError(f"curve '{self.name}' intersects itself")

    def is_simple(self) -> bool:
        """Pairwise test of the polygon segments for crossings (adjacent segments excluded)."""
        start = self.points
        end = np.roll(self.points, -1)
        n = self.n
        for row in range(0, n, _SEGMENT_CHUNK):
            rows = np.arange(row, min(row + _SEGMENT_CHUNK, n))
            a, b = start[rows][:, None], end[rows][:, None]
            c, d = start[None, :], end[None, :]
            crossing = (_orientation(a, b, c) * _orientation(a, b, d) < 0) & \
                       (_orientation(c, d, a) * _orientation(c, d, b) < 0)
            gap = np.abs(rows[:, None] - np.arange(n)[None, :])
            crossing &= (gap > 1) & (gap < n - 1)
            if np.any(crossing):
                return False
        return True

    def _reverse_orientation(self):
        order = (-np.arange(self.n)) % self.n
        self.points = self.points[order]
        self.derivative = -self.derivative[order]
        self.second_derivative = self.second_derivative[order]
        logger.debug(f"Curve '{self.name}' reoriented counterclockwise")

    def __repr__(self):
        return f"SmoothCurve(name={self.name!r}, n={self.n})"


def _orientation(a, b, c):
    """Sign of the cross product (b - a) x (c - a)."""
    return np.sign(np.imag(np.conj(b - a) * (c - a)))
