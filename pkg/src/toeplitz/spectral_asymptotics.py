"""
Counting functions and super-exponential decay laws of Toeplitz spectra.

- counting: n(epsilon) = #{j : s_j > epsilon} against a stored spectrum
- capacity_limit_predictor / limit_sequence: lim (j! s_j)^{1/j} = (b/2) Cap(U)^2
- counting_predictor: n(epsilon) ~ C(q+d-1, d-1)/d! (|log eps|/log|log eps|)^d
- counting_study / fit_growth_exponent: tables and log-log fits of the above
- sandwich_limits: the limit law on a nested family of disks
"""

import logging
import math
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import mpmath as mp
import numpy as np
import pandas as pd

from capacity.equilibrium_solver import capacity
from capacity.smooth_curve import SmoothCurve
from landau.magnetic_setup import LandauIndex
from .radial_spectrum import ToeplitzSpectrum, radial_spectrum

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CountingQuery:
    """
    Result of n(epsilon) on a stored spectrum.

    Attributes:
        epsilon: Threshold in (0, 1).
        result (int): Number of stored eigenvalues strictly above epsilon.
        reliable (bool): False when epsilon lies below the resolved part of the spectrum.
        error_bar (int): Eigenvalues within the eigenvalue error of epsilon.
    """
    epsilon: object
    result: int
    reliable: bool = True
    error_bar: int = 0


def _check_epsilon(epsilon):
    if not 0 < epsilon < 1:
        raise ValueError(f"epsilon must lie in (0, 1), got {epsilon}")


def counting(spectrum: ToeplitzSpectrum, epsilon) -> CountingQuery:
    """Count the eigenvalues of spectrum above epsilon."""
    _check_epsilon(epsilon)
    with mp.workprec(spectrum.precision_bits):
        eps = mp.mpf(epsilon)
        result = sum(1 for value in spectrum.eigenvalues if value > eps)
        error = mp.mpf(spectrum.eigenvalue_error)
        error_bar = sum(1 for value in spectrum.eigenvalues if abs(value - eps) <= error) if error > 0 else 0
        floor = max(mp.mpf(spectrum.reliable_threshold), error)
        reliable = bool(eps > floor)
    if not reliable:
        logger.warning(f"epsilon={mp.nstr(eps, 5)} is below the reliable threshold "
                       f"{mp.nstr(floor, 5)} of {spectrum.domain}; count may be too small")
    return CountingQuery(epsilon=epsilon, result=result, reliable=reliable, error_bar=error_bar)


def capacity_limit_predictor(q, b: float, curve: SmoothCurve) -> float:
    """Limit (b/2) Cap(K)^2 of (j! s_j)^{1/j} for the set K bounded by curve."""
    if not isinstance(q, LandauIndex):
        LandauIndex(q)
    if not b > 0:
        raise ValueError(f"field strength must be positive, got b={b}")
    return 0.5 * b * capacity(curve) ** 2


def limit_sequence(spectrum: ToeplitzSpectrum, j_min: int = 1, j_max: Optional[int] = None) -> List[Tuple[int, object]]:
    """
    Pairs (j, (j! s_j)^{1/j}) in the precision of spectrum, s_j the j-th largest eigenvalue.

    The j-th root is taken in the log domain, (log Gamma(j+1) + log s_j)/j,
    so neither j! nor s_j has to be representable on its own.

    Raises:
        ValueError: If an eigenvalue in the requested range is not positive.
    """
    j_max = len(spectrum) if j_max is None else min(j_max, len(spectrum))
    if j_min < 1:
        raise ValueError("the limit sequence starts at j = 1")
    sequence = []
    with mp.workprec(spectrum.precision_bits):
        for j in range(j_min, j_max + 1):
            value = spectrum.eigenvalues[j - 1]
            if not value > 0:
                raise ValueError(f"eigenvalue s_{j} = {mp.nstr(value, 5)} is not positive")
            sequence.append((j, mp.exp((mp.loggamma(j + 1) + mp.log(value)) / j)))
    return sequence


def limit_frame(spectrum: ToeplitzSpectrum, j_max: Optional[int] = None) -> pd.DataFrame:
    """Table j, s_j, (j! s_j)^{1/j} with decimal strings at the precision of spectrum."""
    frame = spectrum.to_frame()
    if j_max is not None:
        frame = frame[frame['j'] <= j_max].copy()
    roots = dict(limit_sequence(spectrum, 1, j_max))
    frame['limit'] = [mp.nstr(roots[j], spectrum.digits) if j in roots else '' for j in frame['j']]
    return frame


def counting_predictor(epsilon, q, d: int) -> float:
    """
    C(q+d-1, d-1)/d! (|log eps|/log|log eps|)^d.

    Args:
        epsilon: Threshold in (0, e^{-e}), so that log|log eps| > 1.
        q (LandauIndex | int): Level index.
        d (int): Half-dimension.
    """
    index = q if isinstance(q, LandauIndex) else LandauIndex(q)
    if d < 1:
        raise ValueError(f"dimension must be at least 1, got d={d}")
    eps = mp.mpf(epsilon)
    if not 0 < eps < mp.exp(-mp.e):
        raise ValueError(f"epsilon must lie in (0, e^-e), got {epsilon}")
    log_eps = abs(mp.log(eps))
    ratio = log_eps / mp.log(log_eps)
    return float(math.comb(index.q + d - 1, d - 1) / math.factorial(d) * ratio ** d)


def counting_study(spectrum: ToeplitzSpectrum, epsilons: Iterable, d: Optional[int] = None) -> pd.DataFrame:
    """
    Table of n(epsilon) against the counting predictor.

    Columns: epsilon, count, predictor, normalized (count/predictor), reliable.
    """
    d = spectrum.d if d is None else d
    rows = []
    for epsilon in epsilons:
        query = counting(spectrum, epsilon)
        predictor = counting_predictor(epsilon, spectrum.q, d)
        rows.append({
            'epsilon': float(epsilon),
            'count': query.result,
            'predictor': predictor,
            'normalized': query.result / predictor,
            'reliable': query.reliable,
        })
    return pd.DataFrame(rows, columns=['epsilon', 'count', 'predictor', 'normalized', 'reliable'])


@dataclass(frozen=True)
class GrowthFit:
    """
    Log-log fit n(eps) ~ C X^p with X = |log eps|/log|log eps|.

    constant is C at the fixed exponent d; the two ratios compare it with
    q/d! and (q+1)/d!.
    """
    exponent: float
    constant: float
    constant_over_q: float
    constant_over_q_plus_1: float
    points: int


def fit_growth_exponent(study: pd.DataFrame, q: int, d: int) -> GrowthFit:
    """Fit the growth exponent of a counting_study table (rows with count > 0)."""
    usable = study[study['count'] > 0]
    if len(usable) < 2:
        raise ValueError("at least two positive counts are needed for the fit")
    log_eps = np.abs(np.log(usable['epsilon'].to_numpy(dtype=float)))
    scale = np.log(log_eps / np.log(log_eps))
    log_count = np.log(usable['count'].to_numpy(dtype=float))
    exponent, _ = np.polyfit(scale, log_count, 1)
    constant = float(np.exp(np.mean(log_count - d * scale)))
    reference = math.factorial(d)
    fit = GrowthFit(
        exponent=float(exponent),
        constant=constant,
        constant_over_q=constant * reference / q,
        constant_over_q_plus_1=constant * reference / (q + 1),
        points=len(usable),
    )
    logger.info(f"Growth fit over {fit.points} points: exponent {fit.exponent:.4f}, constant {fit.constant:.4f} "
                f"(x d!/q = {fit.constant_over_q:.4f}, x d!/(q+1) = {fit.constant_over_q_plus_1:.4f})")
    return fit


def sandwich_limits(q, b: float, radii: Sequence[float], j: int, precision_bits: Optional[int] = None) -> pd.DataFrame:
    """
    The limit law on nested disks.

    For each radius R the row holds the predictor (b/2) R^2 and the empirical
    (j! s_j)^{1/j} at the given j. Nested disks give ordered predictors and,
    by min-max, ordered eigenvalues.
    """
    rows = []
    for radius in sorted(radii):
        spectrum = radial_spectrum(q, b, radius, j, precision_bits)
        _, value = limit_sequence(spectrum, j, j)[0]
        rows.append({'radius': float(radius), 'predictor': 0.5 * b * radius ** 2, 'empirical': float(value),
                     's_j': mp.nstr(spectrum.eigenvalues[j - 1], spectrum.digits)})
    return pd.DataFrame(rows, columns=['radius', 'predictor', 'empirical', 's_j'])
