"""
Galerkin spectrum of S_q^U = P_q chi_U P_q for general bounded planar U.

The operator is compressed to span{phi_{q,0}, ..., phi_{q,M}} of the
origin-centered angular-momentum basis:

    G_{m m'} = int_U conj(phi_{q,m}) phi_{q,m'} dx,

assembled by a 2D product rule and diagonalized with scipy.linalg.eigh. This
is the double-precision path: eigenvalues below the noise floor of the
assembly (about 1e-13) are not resolved.

Regions:
--------
- DiskRegion: disk with arbitrary center, polar Gauss-Legendre x trapezoid rule
- CurveRegion: interior of a SmoothCurve star-shaped about a center point
"""

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

import mpmath as mp
import numpy as np
from scipy import linalg
from scipy.special import roots_legendre

from capacity.curve_library import trigonometric_resample
from capacity.smooth_curve import SmoothCurve
from config import Config
from core.errors import QuadratureError, TruncationError
from landau.magnetic_setup import LandauIndex
from .landau_basis import basis_matrix
from .radial_spectrum import ToeplitzSpectrum, radial_eigenvalue

logger = logging.getLogger(__name__)

# eigenvalues below this are indistinguishable from assembly rounding
NOISE_FLOOR = 1e-13
AREA_RTOL = 1e-10


def _radial_rule(count: int) -> Tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes rho in (0, 1) with weights for int_0^1 f(rho) rho drho."""
    nodes, weights = roots_legendre(count)
    rho = 0.5 * (nodes + 1)
    return rho, 0.5 * weights * rho


@dataclass(frozen=True)
class DiskRegion:
    """Disk of the given radius around center; radius 0 is the empty set."""
    center: complex = 0.0
    radius: float = 1.0

    def __post_init__(self):
        if self.radius < 0:
            raise ValueError(f"radius must be non-negative, got {self.radius}")

    @property
    def area(self) -> float:
        return np.pi * self.radius ** 2

    def circumradius(self) -> float:
        """Radius of the smallest origin-centered disk containing the region."""
        return abs(self.center) + self.radius

    def describe(self) -> str:
        return f"disk(center={complex(self.center):g}, R={self.radius:g})"

    def quadrature(self, radial_nodes: int, angular_nodes: int):
        rho, rho_weights = _radial_rule(radial_nodes)
        theta = 2 * np.pi * np.arange(angular_nodes) / angular_nodes
        points = self.center + self.radius * np.outer(rho, np.exp(1j * theta))
        weights = np.outer(rho_weights, np.full(angular_nodes, 2 * np.pi / angular_nodes)) * self.radius ** 2
        return points.ravel(), weights.ravel()


@dataclass(frozen=True)
class CurveRegion:
    """
    Interior of a closed curve that is star-shaped about center.

    The map (rho, t) -> c + rho (x(t) - c) covers the region with Jacobian
    rho Im(conj(x - c) x'), which must stay positive.
    """
    curve: SmoothCurve
    center: Optional[complex] = None

    @property
    def origin(self) -> complex:
        return self.curve.centroid() if self.center is None else complex(self.center)

    @property
    def area(self) -> float:
        return self.curve.area()

    def circumradius(self) -> float:
        return float(np.max(np.abs(self.curve.points)))

    def describe(self) -> str:
        return f"curve({self.curve.name})"

    def _sectors(self, angular_nodes: int):
        count = max(angular_nodes, self.curve.n)
        offset = trigonometric_resample(self.curve.points - self.origin, count)
        tangent = trigonometric_resample(self.curve.derivative, count)
        return offset, np.imag(np.conj(offset) * tangent)

    def is_star_shaped(self, angular_nodes: Optional[int] = None) -> bool:
        _, sector = self._sectors(angular_nodes or Config.GALERKIN_ANGULAR_NODES)
        return bool(np.min(sector) > 0)

    def quadrature(self, radial_nodes: int, angular_nodes: int):
        c = self.origin
        offset, sector = self._sectors(angular_nodes)
        count = offset.size
        if np.min(sector) <= 0:
            raise ValueError(f"curve '{self.curve.name}' is not star-shaped about {c:g}")
        rho, rho_weights = _radial_rule(radial_nodes)
        points = c + np.outer(rho, offset)
        weights = np.outer(rho_weights, sector * 2 * np.pi / count)
        return points.ravel(), weights.ravel()


def basis_tail_mass(q, b: float, radius: float, m: int, precision_bits: int = 128):
    """Mass of phi_{q,m} inside the origin-centered disk of the given radius."""
    return radial_eigenvalue(q, m, mp.mpf(b) * mp.mpf(radius) ** 2 / 2, precision_bits)


def basis_cutoff(q, b: float, radius: float, tolerance: Optional[float] = None, limit: int = 2000) -> int:
    """
    Smallest M such that phi_{q,m}, m > M, carries less than tolerance of
    mass inside the origin-centered disk of the given radius.
    """
    index = q if isinstance(q, LandauIndex) else LandauIndex(q)
    tolerance = tolerance or Config.BASIS_TAIL_TOL
    x = b * radius ** 2 / 2
    m = max(index.q, int(np.ceil(x)) + index.q)
    while basis_tail_mass(index, b, radius, m + 1) >= tolerance:
        m += 1
        if m > limit:
            raise TruncationError(f"no basis cutoff below {limit} reaches tail mass {tolerance:g}", module=__name__)
    return m


def galerkin_matrix(q, b: float, region, M: int, radial_nodes: Optional[int] = None,
                    angular_nodes: Optional[int] = None) -> np.ndarray:
    """Hermitian matrix G_{m m'} = int_U conj(phi_{q,m}) phi_{q,m'} dx, m, m' <= M."""
    radial_nodes = radial_nodes or Config.GALERKIN_RADIAL_NODES
    angular_nodes = angular_nodes or Config.GALERKIN_ANGULAR_NODES
    points, weights = region.quadrature(radial_nodes, angular_nodes)
    quadrature_area = float(np.sum(weights))
    if abs(quadrature_area - region.area) > AREA_RTOL * max(region.area, 1.0):
        raise QuadratureError(f"quadrature area {quadrature_area:.15g} differs from region area {region.area:.15g}",
                              module=__name__)
    values = basis_matrix(q, b, points, M + 1)
    matrix = values.conj().T @ (weights[:, None] * values)
    return 0.5 * (matrix + matrix.conj().T)


def galerkin_spectrum(q, b: float, region, M: Optional[int] = None, radial_nodes: Optional[int] = None,
                      angular_nodes: Optional[int] = None, tail_tolerance: Optional[float] = None) -> ToeplitzSpectrum:
    """
    Eigenvalues of S_q^U in a truncated Landau-level basis.

    Args:
        q (LandauIndex | int): Level index.
        b (float): Field strength.
        region (DiskRegion | CurveRegion): Bounded region U.
        M (int, optional): Basis cutoff; chosen by basis_cutoff when omitted.
        radial_nodes (int, optional): Gauss-Legendre nodes in the radial direction.
        angular_nodes (int, optional): Trapezoid nodes in the angular direction.
        tail_tolerance (float, optional): Admissible mass of the omitted basis functions.

    Returns:
        ToeplitzSpectrum: Decreasing eigenvalues clipped to [0, 1], 53-bit precision.

    Raises:
        TruncationError: If a supplied M leaves basis functions with mass above tolerance.
        QuadratureError: If the 2D rule misses the region area.
    """
    index = q if isinstance(q, LandauIndex) else LandauIndex(q)
    if not b > 0:
        raise ValueError(f"field strength must be positive, got b={b}")
    tail_tolerance = tail_tolerance or Config.BASIS_TAIL_TOL
    radius = region.circumradius()

    if region.area == 0:
        size = (M if M is not None else index.q) + 1
        logger.debug("Region of zero area: spectrum is identically zero")
        return ToeplitzSpectrum(q=index.q, b=b, domain=region.describe(), eigenvalues=[mp.mpf(0)] * size,
                                precision_bits=53, eigenvalue_error=0.0)

    if M is None:
        M = basis_cutoff(index, b, radius, tail_tolerance)
    else:
        tail = basis_tail_mass(index, b, radius, M + 1)
        if tail >= tail_tolerance:
            raise TruncationError(f"basis cutoff M={M} leaves tail mass {mp.nstr(tail, 3)} above "
                                  f"{tail_tolerance:g}; use M >= {basis_cutoff(index, b, radius, tail_tolerance)}",
                                  module=__name__)

    matrix = galerkin_matrix(index, b, region, M, radial_nodes, angular_nodes)
    eigenvalues = np.clip(linalg.eigh(matrix, eigvals_only=True)[::-1], 0.0, 1.0)
    error = max(NOISE_FLOOR, tail_tolerance)
    logger.debug(f"Galerkin spectrum on {region.describe()}: M={M}, top eigenvalue {eigenvalues[0]:.15g}")
    return ToeplitzSpectrum(
        q=index.q,
        b=b,
        domain=region.describe(),
        eigenvalues=[mp.mpf(float(value)) for value in eigenvalues],
        precision_bits=53,
        truncation_error=tail_tolerance,
        reliable_threshold=NOISE_FLOOR,
        eigenvalue_error=error,
    )
