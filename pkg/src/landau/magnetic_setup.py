"""
Magnetic setup of the Landau Hamiltonian L = -(grad - i b A0)^2 on R^{2d}.

This module holds the two parameter types shared by every package
(field strength b with half-dimension d, and the level index q) together with
the geometric helpers of the symmetric gauge:

- landau_level: the Landau level (2(q-1)+d) b
- magnetic_potential: A0(x) = 1/2 (-x2, x1, ..., -x_{2d}, x_{2d-1})
- wedge: x ^ y summed over the d coordinate planes
- magnetic_phase: exp(-i b (x ^ y) / 2), the phase carried by P_q and L^{-1}

Points of R^{2d} are passed as arrays of d complex coordinates
z_j = x_{2j-1} + i x_{2j}; for d = 1 a complex scalar is accepted as well.
"""

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class MagneticSetup:
    """
    Field strength and half-dimension of the Landau Hamiltonian.

    Attributes:
        b (float): Intensity of the magnetic field, b > 0.
        d (int): Half-dimension, the space is R^{2d}, d >= 1.
    """
    b: float
    d: int = 1

    def __post_init__(self):
        if not self.b > 0:
            raise ValueError(f"field strength must be positive, got b={self.b}")
        if int(self.d) != self.d or self.d < 1:
            raise ValueError(f"half-dimension must be a positive integer, got d={self.d}")


@dataclass(frozen=True)
class LandauIndex:
    """Index q >= 1 of a Landau level."""
    q: int

    def __post_init__(self):
        if int(self.q) != self.q or self.q < 1:
            raise ValueError(f"Landau index must be a positive integer, got q={self.q}")


def landau_level(setup: MagneticSetup, q) -> float:
    """
    Return the Landau level Lambda_q = (2(q-1)+d) b.

    Args:
        setup (MagneticSetup): Field strength and half-dimension.
        q (LandauIndex | int): Level index.

    Returns:
        float: The level energy.
    """
    index = q if isinstance(q, LandauIndex) else LandauIndex(q)
    return (2 * (index.q - 1) + setup.d) * setup.b


def as_complex_point(z, d: int) -> np.ndarray:
    """Return z as an array of d complex coordinates."""
    point = np.atleast_1d(np.asarray(z, dtype=complex))
    if point.shape != (d,):
        raise ValueError(f"expected {d} complex coordinate(s), got shape {point.shape}")
    return point


def magnetic_potential(x: np.ndarray) -> np.ndarray:
    """
    Symmetric-gauge potential A0 evaluated at real points.

    Args:
        x (np.ndarray): Real coordinates with last axis of even length 2d.

    Returns:
        np.ndarray: A0(x) with the same shape as x.
    """
    x = np.asarray(x, dtype=float)
    potential = np.empty_like(x)
    potential[..., 0::2] = -0.5 * x[..., 1::2]
    potential[..., 1::2] = 0.5 * x[..., 0::2]
    return potential


def wedge(z, w, axis=None):
    """
    Symplectic product x ^ y = sum_j Im(conj(z_j) w_j) of two complex points.

    Elementwise over broadcast arrays; pass ``axis`` to sum over the axis
    that enumerates the d coordinate planes.
    """
    product = np.imag(np.conj(np.asarray(z, dtype=complex)) * np.asarray(w, dtype=complex))
    return product if axis is None else np.sum(product, axis=axis)


def magnetic_phase(z, w, b: float, axis=None):
    """Phase exp(-i b (z ^ w) / 2) of the integral kernels of P_q and L^{-1}."""
    return np.exp(-0.5j * b * wedge(z, w, axis=axis))
