"""
Toeplitz spectrum of a product of disks in four real dimensions.

For U = D_{R1} x D_{R2} the Landau Hamiltonian separates, and the level-q
eigenspace is the sum over q1 + q2 = q + 1 of the tensor products of the
planar levels q1 and q2. On each block S_q^U acts as S_{q1}^{D_{R1}} x
S_{q2}^{D_{R2}}, so its eigenvalues are the products s^{(q1)}_{m1} s^{(q2)}_{m2}.
"""

import logging
from typing import Optional

import mpmath as mp

from config import Config
from core.errors import TruncationError
from landau.magnetic_setup import LandauIndex
from .radial_spectrum import ToeplitzSpectrum, radial_spectrum

logger = logging.getLogger(__name__)


def tensor_spectrum_d2(q, b: float, R1: float, R2: float, cutoff: Optional[int] = None,
                       precision_bits: Optional[int] = None, epsilon_min=None) -> ToeplitzSpectrum:
    """
    Merged product spectrum over all blocks q1 + q2 = q + 1.

    Each factor is computed up to m = cutoff. A product below
    max(s1[0] s2[-1], s1[-1] s2[0]) over the blocks may have partners beyond
    the cutoff, so only the products above that threshold are kept.

    Args:
        q (LandauIndex | int): Level index of the four-dimensional problem.
        b (float): Field strength.
        R1, R2 (float): Disk radii.
        cutoff (int, optional): Largest angular momentum in each factor.
        precision_bits (int, optional): Binary working precision.
        epsilon_min (optional): Smallest counting threshold the caller will query.

    Returns:
        ToeplitzSpectrum: d = 2, labels (q1, m1, m2).

    Raises:
        TruncationError: If epsilon_min does not lie above the kept range.
    """
    index = q if isinstance(q, LandauIndex) else LandauIndex(q)
    cutoff = cutoff or Config.TENSOR_CUTOFF
    precision_bits = precision_bits or Config.PRECISION_BITS

    blocks = []
    for q1 in range(1, index.q + 1):
        q2 = index.q + 1 - q1
        first = radial_spectrum(q1, b, R1, cutoff, precision_bits)
        second = radial_spectrum(q2, b, R2, cutoff, precision_bits)
        blocks.append((q1, first, second))

    with mp.workprec(precision_bits):
        threshold = max(max(first.eigenvalues[0] * second.eigenvalues[-1],
                            first.eigenvalues[-1] * second.eigenvalues[0])
                        for _, first, second in blocks)
        if epsilon_min is not None and not mp.mpf(epsilon_min) > threshold:
            raise TruncationError(f"cutoff {cutoff} resolves products only above {mp.nstr(threshold, 5)}; "
                                  f"epsilon={mp.nstr(mp.mpf(epsilon_min), 5)} needs a larger cutoff",
                                  module=__name__)
        products = []
        for q1, first, second in blocks:
            for value1, m1 in zip(first.eigenvalues, first.labels):
                if value1 * second.eigenvalues[0] <= threshold:
                    continue
                for value2, m2 in zip(second.eigenvalues, second.labels):
                    product = value1 * value2
                    if product > threshold:
                        products.append((product, (q1, m1, m2)))

    products.sort(key=lambda item: (-item[0], item[1]))
    logger.debug(f"Tensor spectrum q={index.q}: {len(blocks)} block(s), {len(products)} products "
                 f"above {mp.nstr(threshold, 5)}")
    return ToeplitzSpectrum(
        q=index.q,
        b=b,
        domain=f"disk(R={R1:g}) x disk(R={R2:g})",
        eigenvalues=[value for value, _ in products],
        precision_bits=precision_bits,
        truncation_error=threshold,
        reliable_threshold=threshold,
        labels=[label for _, label in products],
        d=2,
    )
