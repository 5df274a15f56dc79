"""
Spectrum of the Toeplitz operator S_q^U = P_q chi_U P_q for a centered disk.

Rotational symmetry diagonalizes S_q^U in the angular-momentum basis, with
eigenvalues

    s_m = k!/(k+alpha)! int_0^x t^alpha L_k^alpha(t)^2 exp(-t) dt,    x = b R^2/2,

the mass of phi_{q,m} inside the disk. The integral is evaluated by
Gauss-Legendre quadrature in mpmath at the requested binary precision, so the
super-exponentially small tail of the spectrum keeps full relative accuracy.
For q = 1 it equals the regularized lower incomplete gamma function
P(m+1, x).
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import List, Optional, Tuple

import mpmath as mp
import pandas as pd
from mpmath.calculus.quadrature import GaussLegendre

from config import Config
from core.errors import PrecisionError
from landau.magnetic_setup import LandauIndex
from .landau_basis import basis_labels, laguerre_mp

logger = logging.getLogger(__name__)


@dataclass
class ToeplitzSpectrum:
    """
    Decreasing eigenvalue sequence of a Toeplitz operator on a Landau level.

    Attributes:
        q (int): Level index.
        b (float): Field strength.
        domain (str): Description of U.
        eigenvalues (list): s_1 >= s_2 >= ... as mpmath numbers (stored from index 0).
        precision_bits (int): Binary precision the eigenvalues carry.
        truncation_error: Estimated total mass of the eigenvalues left out.
        reliable_threshold: Counts at epsilon <= this value may miss eigenvalues.
        eigenvalue_error (float): Absolute accuracy of each stored eigenvalue.
        labels (list): Basis label(s) of each eigenvalue, when known.
        d (int): Half-dimension.
    """
    q: int
    b: float
    domain: str
    eigenvalues: List[object]
    precision_bits: int
    truncation_error: object = 0
    reliable_threshold: object = 0
    eigenvalue_error: float = 0.0
    labels: List[object] = field(default_factory=list)
    d: int = 1

    def __len__(self):
        return len(self.eigenvalues)

    @property
    def digits(self) -> int:
        """Decimal digits implied by the binary precision."""
        return max(15, int(self.precision_bits * 0.30103))

    def as_floats(self) -> List[float]:
        return [float(value) for value in self.eigenvalues]

    def trace(self):
        with mp.workprec(self.precision_bits):
            return mp.fsum(self.eigenvalues)

    def to_frame(self) -> pd.DataFrame:
        """Rows j = 1, 2, ... and s_j as decimal strings at full precision."""
        rows = [{'j': j, 's_j': mp.nstr(value, self.digits)} for j, value in enumerate(self.eigenvalues, start=1)]
        return pd.DataFrame(rows, columns=['j', 's_j'])

    def metadata(self) -> dict:
        return {
            'q': self.q,
            'b': self.b,
            'd': self.d,
            'domain': self.domain,
            'precision_bits': self.precision_bits,
            'count': len(self.eigenvalues),
            'truncation_error': mp.nstr(mp.mpf(self.truncation_error), 6),
        }


@lru_cache(maxsize=16)
def _gauss_legendre(degree: int, prec: int) -> Tuple[Tuple[object, object], ...]:
    """Nodes and weights on [-1, 1] with 3 * 2^(degree-1) points."""
    return tuple(GaussLegendre(mp.mp).calc_nodes(degree, prec))


def _degree_for(count: int) -> int:
    degree = 1
    while 3 * 2 ** (degree - 1) < count:
        degree += 1
    return degree


def radial_eigenvalue(q, m: int, x, precision_bits: int, node_count: Optional[int] = None):
    """
    Mass of phi_{q,m} inside the disk with b R^2/2 = x.

    Args:
        q (LandauIndex | int): Level index.
        m (int): Angular-momentum basis index.
        x: Scaled radius b R^2/2 > 0.
        precision_bits (int): Working precision.
        node_count (int, optional): Minimal Gauss-Legendre node count.
    """
    k, alpha, _ = basis_labels(q, m)
    needed = node_count or (alpha + 2 * k) // 2 + Config.RADIAL_NODE_MARGIN
    nodes = _gauss_legendre(_degree_for(needed), precision_bits)
    with mp.workprec(precision_bits):
        x = mp.mpf(x)
        half = x / 2
        total = mp.mpf(0)
        for node, weight in nodes:
            t = half * (node + 1)
            total += weight * t ** alpha * laguerre_mp(k, alpha, t) ** 2 * mp.exp(-t)
        normalization = mp.factorial(k) / mp.factorial(k + alpha)
        return +(half * total * normalization)


def lowest_level_eigenvalue(m: int, x, precision_bits: int):
    """Closed form P(m+1, x) = gamma(m+1, x)/m! of the q = 1 disk eigenvalues."""
    with mp.workprec(precision_bits):
        return +mp.gammainc(m + 1, 0, mp.mpf(x), regularized=True)


def check_monotone_tail(values, start: int):
    """
    Raise PrecisionError unless values[start:] is positive and strictly decreasing.

    A tail that stops decreasing means the working precision no longer
    resolves the super-exponential decay.
    """
    for m in range(start, len(values)):
        if not values[m] > 0:
            raise PrecisionError(f"eigenvalue s_{m} = {mp.nstr(values[m], 5)} is not positive", module=__name__)
        if m > start and not values[m] < values[m - 1]:
            raise PrecisionError(f"eigenvalue tail stops decreasing at m={m}; increase precision_bits",
                                 module=__name__)


def radial_spectrum(q, b: float, R: float, m_max: int, precision_bits: Optional[int] = None) -> ToeplitzSpectrum:
    """
    Eigenvalues of S_q^U for the disk U of radius R centered at the origin.

    Args:
        q (LandauIndex | int): Level index.
        b (float): Field strength.
        R (float): Disk radius.
        m_max (int): Largest angular-momentum index computed.
        precision_bits (int, optional): Binary working precision.

    Returns:
        ToeplitzSpectrum: m_max + 1 decreasing eigenvalues, labeled by their basis index m.
    """
    index = q if isinstance(q, LandauIndex) else LandauIndex(q)
    if not b > 0:
        raise ValueError(f"field strength must be positive, got b={b}")
    if not R > 0:
        raise ValueError(f"disk radius must be positive, got R={R}")
    if m_max < 1:
        raise ValueError(f"m_max must be at least 1, got {m_max}")
    precision_bits = precision_bits or Config.PRECISION_BITS
    if precision_bits < 53:
        raise ValueError("precision_bits must be at least 53")

    with mp.workprec(precision_bits):
        x = mp.mpf(b) * mp.mpf(R) ** 2 / 2
    node_count = (m_max + 2 * index.q) // 2 + Config.RADIAL_NODE_MARGIN
    values = [radial_eigenvalue(index, m, x, precision_bits, node_count) for m in range(m_max + 1)]
    tail_start = max(index.q, int(2 * x) + index.q)
    if tail_start < m_max:
        check_monotone_tail(values, tail_start)

    with mp.workprec(precision_bits):
        last = values[-1]
        ratio = x / (m_max + 2)
        truncation = last * ratio / (1 - ratio) if ratio < 1 else mp.inf

    # stable sort by value, ties broken by basis index
    order = sorted(range(len(values)), key=lambda m: (-values[m], m))
    spectrum = ToeplitzSpectrum(
        q=index.q,
        b=b,
        domain=f"disk(R={R:g})",
        eigenvalues=[values[m] for m in order],
        precision_bits=precision_bits,
        truncation_error=truncation,
        reliable_threshold=last,
        eigenvalue_error=0.0,
        labels=list(order),
    )
    logger.debug(f"Radial spectrum q={index.q}, x={mp.nstr(x, 8)}: {len(values)} eigenvalues at {precision_bits} bits")
    return spectrum
