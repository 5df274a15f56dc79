"""
Resolvent kernel G0 of the Landau Hamiltonian and its conormal derivative.

    G0(z, zeta) = b^{d-1}/(4 pi)^d exp(-i b (z ^ zeta)/2) I(b|z - zeta|^2/4)

This is the integral kernel of L^{-1} for L = -(grad - i b A0)^2 with
A0 = 1/2(-x2, x1, ...). For d = 1, I = K_0 and the leading singularity is
(1/2pi) log(1/|z - zeta|).

The single-point evaluators (green_g0, normal_derivative_g0) use the mpmath
quadrature of I and I'; the plane helpers at the bottom evaluate the same
kernel on numpy arrays through the Bessel closed form and feed the Nystrom
assembly.
"""

import logging
from typing import Optional

import mpmath as mp
import numpy as np
from scipy import special

from config import Config
from landau.magnetic_setup import MagneticSetup, as_complex_point, magnetic_phase
from .i_integral import eval_I, eval_dI

logger = logging.getLogger(__name__)


def kernel_prefactor(setup: MagneticSetup) -> float:
    """b^{d-1}/(4 pi)^d, the constant in front of I."""
    return setup.b ** (setup.d - 1) / (4 * np.pi) ** setup.d


def _separation(setup: MagneticSetup, z, zeta):
    z = as_complex_point(z, setup.d)
    zeta = as_complex_point(zeta, setup.d)
    distance_sq = float(np.sum(np.abs(z - zeta) ** 2))
    if distance_sq == 0.0:
        raise ValueError("G0 is singular on the diagonal z = zeta")
    return z, zeta, distance_sq


def green_g0(setup: MagneticSetup, z, zeta, dps: Optional[int] = None) -> complex:
    """
    Evaluate G0(z, zeta) with I computed by quadrature.

    Args:
        setup (MagneticSetup): Field strength and half-dimension.
        z, zeta: Points given as d complex coordinates (a complex scalar for d = 1).
        dps (int, optional): Working precision of the quadrature.

    Returns:
        complex: Kernel value.
    """
    z, zeta, distance_sq = _separation(setup, z, zeta)
    s = setup.b * distance_sq / 4
    profile = float(eval_I(s, setup.d, dps))
    phase = complex(magnetic_phase(z, zeta, setup.b, axis=-1))
    return kernel_prefactor(setup) * phase * profile


def eval_green_mehler(setup: MagneticSetup, z, zeta, dps: Optional[int] = None) -> complex:
    """
    Quadrature of the heat-kernel (Mehler) representation of G0 for d = 1.

    G0 = phase * int_0^inf b/(4 pi sinh(b s)) exp(-b |z-zeta|^2 coth(b s)/4) ds,
    integrated in the time variable s itself, independently of eval_I. The
    range stops at b s = 8 + QUADRATURE_TAIL.
    """
    if setup.d != 1:
        raise ValueError("the Mehler form is implemented for d = 1")
    z, zeta, distance_sq = _separation(setup, z, zeta)
    b = setup.b
    with mp.workdps(dps or Config.QUADRATURE_DPS):
        mb = mp.mpf(b)
        r2 = mp.mpf(distance_sq)

        def integrand(time):
            if time == 0:
                return mp.mpf(0)
            return mb / (4 * mp.pi * mp.sinh(mb * time)) * mp.exp(-mb * r2 * mp.coth(mb * time) / 4)

        peak = r2 / 4
        points = [mp.mpf(0)] + [peak * mp.mpf(10) ** k for k in range(-2, 3) if peak * mp.mpf(10) ** k < 1 / mb]
        points += [1 / mb, 8 / mb, (8 + mp.mpf(Config.QUADRATURE_TAIL)) / mb]
        value = mp.quad(integrand, sorted(set(points)))
    phase = complex(magnetic_phase(z[0], zeta[0], b))
    return complex(value) * phase


def normal_derivative_g0(setup: MagneticSetup, x, nu, y, dps: Optional[int] = None) -> complex:
    """
    Conormal derivative nu . (grad_x - i b A0(x)) G0(x, y) for d = 1.

    With G0 = g(r) Phi(x, y), the covariant gradient of the phase is
    i b A0(y - x) Phi, so

        nu . (grad_x - i b A0(x)) G0 = Phi [g'(r) nu.(x-y)/r + i b g(r) nu.A0(y-x)]

    with g'(r) = prefactor * I'(s) * b r/2 and I' taken by quadrature.

    Args:
        setup (MagneticSetup): Field strength, d = 1.
        x (complex): Point where the derivative is taken.
        nu (complex): Unit direction, as a complex number.
        y (complex): Second point, y != x.
    """
    if setup.d != 1:
        raise ValueError("the conormal derivative is implemented for d = 1")
    x, y, distance_sq = _separation(setup, x, y)
    x, y = complex(x[0]), complex(y[0])
    nu = complex(nu)
    b = setup.b
    r = np.sqrt(distance_sq)
    s = b * distance_sq / 4
    prefactor = kernel_prefactor(setup)
    g = prefactor * float(eval_I(s, 1, dps))
    dg_dr = prefactor * float(eval_dI(s, 1, dps)) * b * r / 2

    separation = x - y
    radial = dg_dr * _dot(nu, separation) / r
    gauge = 1j * b * g * _dot(nu, _potential(-separation))
    return complex(magnetic_phase(x, y, b)) * (radial + gauge)


def _dot(u, v):
    """Euclidean dot product of plane vectors stored as complex numbers."""
    return np.real(np.conj(u) * v)


def _potential(v):
    """A0(v) = 1/2 (-v2, v1) as a complex number, i.e. i v / 2."""
    return 0.5j * v


# --- vectorized plane kernels (d = 1, Bessel closed form) ---

def green_plane(b: float, x, y):
    """G0(x, y) on broadcast arrays of plane points, d = 1."""
    x = np.asarray(x, dtype=complex)
    y = np.asarray(y, dtype=complex)
    s = b * np.abs(x - y) ** 2 / 4
    return special.k0(s) / (4 * np.pi) * magnetic_phase(x, y, b)


def normal_derivative_plane(b: float, x, nu, y):
    """nu . (grad_x - i b A0(x)) G0(x, y) on broadcast arrays, d = 1."""
    x = np.asarray(x, dtype=complex)
    y = np.asarray(y, dtype=complex)
    separation = x - y
    s = b * np.abs(separation) ** 2 / 4
    # K_0' = -K_1 and ds/dr = b r/2
    dg_over_r = -b / (8 * np.pi) * special.k1(s)
    g = special.k0(s) / (4 * np.pi)
    radial = dg_over_r * _dot(nu, separation)
    gauge = 1j * b * g * _dot(nu, _potential(-separation))
    return magnetic_phase(x, y, b) * (radial + gauge)


def adjoint_normal_derivative_plane(b: float, x, y, nu_y):
    """
    nu_y . (grad_y + i b A0(y)) G0(x, y), the double-layer kernel.

    Equals the conjugate of the conormal derivative of G0(y, x) in y.
    """
    return np.conj(normal_derivative_plane(b, y, nu_y, x))
