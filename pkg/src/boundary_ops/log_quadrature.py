"""
Spectral quadrature for periodic integrands with a logarithmic singularity.

For n = 2m equispaced nodes t_j = pi j/m,

    int_0^{2pi} log(4 sin^2((t - s)/2)) f(s) ds  ~  sum_j R_j(t) f(t_j)

with the weights

    R_j(t) = -(2 pi/m) sum_{k=1}^{m-1} cos(k (t - t_j))/k - (pi/m^2) cos(m (t - t_j)),

which integrate trigonometric polynomials of degree < m exactly. A kernel
M(t, s) = M1(t, s) log(4 sin^2((t - s)/2)) + M2(t, s) with smooth M1, M2 is
discretized as R_{|i-j|} M1(t_i, t_j) + (pi/m) M2(t_i, t_j).
"""

from functools import lru_cache

import numpy as np
from scipy.linalg import toeplitz


@lru_cache(maxsize=32)
def _log_weight_row(n: int) -> np.ndarray:
    if n < 2 or n % 2 != 0:
        raise ValueError(f"node count must be even, got n={n}")
    m = n // 2
    offsets = np.pi * np.arange(n) / m
    k = np.arange(1, m)
    row = -(2 * np.pi / m) * np.sum(np.cos(np.outer(offsets, k)) / k, axis=1)
    row -= np.pi / m ** 2 * np.cos(m * offsets)
    row.setflags(write=False)
    return row


def log_weights(n: int) -> np.ndarray:
    """
    Weight matrix R with R[i, j] = R_j(t_i).

    The matrix is symmetric circulant because R_j(t_i) depends on
    (t_i - t_j) only through an even function.
    """
    return toeplitz(_log_weight_row(n))


def trapezoid_weight(n: int) -> float:
    """Weight pi/m of the periodic trapezoid rule with n = 2m nodes."""
    return 2 * np.pi / n


def log_sine_squared(n: int) -> np.ndarray:
    """log(4 sin^2((t_i - t_j)/2)) with zeros on the diagonal."""
    t = 2 * np.pi * np.arange(n) / n
    difference = t[:, None] - t[None, :]
    with np.errstate(divide='ignore'):
        values = np.log(4 * np.sin(difference / 2) ** 2)
    np.fill_diagonal(values, 0.0)
    return values


def kress_matrix(smooth_log_part: np.ndarray, smooth_part: np.ndarray) -> np.ndarray:
    """Assemble R * M1 + (2 pi/n) * M2 for the split kernel M1 log(4 sin^2) + M2."""
    n = smooth_log_part.shape[0]
    return log_weights(n) * smooth_log_part + trapezoid_weight(n) * smooth_part
