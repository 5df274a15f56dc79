"""
Angular-momentum eigenbasis of a Landau level in the plane.

The q-th level (n = q - 1) is spanned by phi_{q,m}, m = 0, 1, 2, ...:

    phi_{q,m}(z) = sqrt(b/2pi) sqrt(k!/(k+alpha)!) t^{alpha/2} L_k^alpha(t) exp(-t/2) exp(i l theta)

with t = b r^2/2, l = m - n, k = min(n, m), alpha = |m - n|. For q = 1 this
is z^m exp(-b|z|^2/4) up to normalization, the holomorphic lowest level of the
gauge A0 = 1/2(-x2, x1).
"""

from typing import Tuple

import mpmath as mp
import numpy as np
from scipy.special import eval_genlaguerre, gammaln

from landau.magnetic_setup import LandauIndex


def basis_labels(q, m: int) -> Tuple[int, int, int]:
    """Return (k, alpha, l) for the basis function phi_{q,m}."""
    index = q if isinstance(q, LandauIndex) else LandauIndex(q)
    if m < 0:
        raise ValueError(f"basis index must be non-negative, got m={m}")
    n = index.q - 1
    return min(n, m), abs(m - n), m - n


def laguerre_mp(k: int, alpha, t):
    """Generalized Laguerre polynomial L_k^alpha(t) in mpmath by the three-term recurrence."""
    previous, current = mp.mpf(0), mp.mpf(1)
    for j in range(k):
        previous, current = current, ((2 * j + 1 + alpha - t) * current - (j + alpha) * previous) / (j + 1)
    return current


def basis_function(q, m: int, b: float, z) -> np.ndarray:
    """
    Evaluate phi_{q,m} at plane points (double precision).

    Args:
        q (LandauIndex | int): Level index.
        m (int): Basis index.
        b (float): Field strength.
        z (array-like): Complex points.
    """
    k, alpha, l = basis_labels(q, m)
    z = np.asarray(z, dtype=complex)
    t = b * np.abs(z) ** 2 / 2
    log_norm = 0.5 * (np.log(b / (2 * np.pi)) + gammaln(k + 1) - gammaln(k + alpha + 1))
    with np.errstate(divide='ignore', invalid='ignore'):
        radial_log = log_norm + 0.5 * alpha * np.log(t) - t / 2
    radial = np.exp(radial_log) * eval_genlaguerre(k, alpha, t)
    if alpha == 0:
        radial = np.where(t == 0, np.exp(log_norm) * eval_genlaguerre(k, 0, 0.0), radial)
    else:
        radial = np.where(t == 0, 0.0, radial)
    return radial * np.exp(1j * l * np.angle(z))


def basis_matrix(q, b: float, z, count: int) -> np.ndarray:
    """Columns phi_{q,0..count-1} evaluated at the points z."""
    z = np.asarray(z, dtype=complex).ravel()
    return np.stack([basis_function(q, m, b, z) for m in range(count)], axis=1)


def level_density(b: float) -> float:
    """Diagonal value b/(2 pi) of every level projection kernel."""
    return b / (2 * np.pi)
