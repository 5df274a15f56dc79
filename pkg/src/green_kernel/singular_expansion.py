"""
Diagonal-singularity expansion of G0.

Expanding exp(-s a) in the negative-power terms of the I0 expansion and
adding the Taylor series of the smooth part Iinf turns I into a pure
power/log series in s = b r^2/4:

    I(s) = sum_{J >= 1-d} P_J s^J - sum_{J >= 0} D_J s^J log s.

Multiplying by the prefactor and the phase gives

    G0 = lead * r^{2-2d}  (d > 1)        or  (1/2pi) log(1/r)  (d = 1)
         + sum a_j r^{2-2d+2j} + sum b_j r^{2-2d+2j} log r + remainder,

where a_j, b_j are the constants of the series times exp(-i b (z ^ zeta)/2),
hence smooth in (z, zeta). Truncating at order N keeps the powers s^J with
J <= N - d, so the remainder is O(r^{2N-2d+2} log r).
"""

import logging
from dataclasses import dataclass, field
from math import gamma, pi
from typing import Dict, Optional

import mpmath as mp
import numpy as np

from config import Config
from landau.magnetic_setup import MagneticSetup, as_complex_point, magnetic_phase
from .expansion_coeffs import expansion_coeffs
from .i_integral import split_point, eval_I, eval_Iinf_derivative

logger = logging.getLogger(__name__)


@dataclass
class KernelExpansion:
    """
    Assembled near-diagonal expansion of G0 for one magnetic setup.

    Attributes:
        setup (MagneticSetup): Field strength and half-dimension.
        N (int): Expansion order.
        leading_coefficient (float): 1/(2pi) for d = 1, Gamma(d-1)/(4 pi^d) for d > 1.
        printed_leading_coefficient (float): 1/(2pi) for d = 1, Gamma(d-1)/(2 pi^d) for d > 1.
        power_coeffs (dict): J -> P_J of the s-series of I.
        log_coeffs (dict): J -> D_J of the s-series of I.
        remainder_order (int): Exponent 2N-2d+2 of the remainder in r.
        remainder_has_log (bool): Whether the leading remainder term carries log r.
        dps (int): Working precision of the coefficients.
    """
    setup: MagneticSetup
    N: int
    leading_coefficient: float
    printed_leading_coefficient: float
    power_coeffs: Dict[int, object] = field(default_factory=dict)
    log_coeffs: Dict[int, object] = field(default_factory=dict)
    remainder_order: int = 0
    remainder_has_log: bool = False
    dps: int = Config.QUADRATURE_DPS

    @property
    def prefactor(self):
        b, d = self.setup.b, self.setup.d
        return mp.mpf(b) ** (d - 1) / (4 * mp.pi) ** d

    def radial_series(self, r):
        """Phase-free value prefactor * (sum P_J s^J - sum D_J s^J log s) at separation r."""
        with mp.workdps(self.dps):
            s = mp.mpf(self.setup.b) * mp.mpf(r) ** 2 / 4
            total = mp.fsum(p * s ** J for J, p in self.power_coeffs.items())
            total -= mp.fsum(q * s ** J for J, q in self.log_coeffs.items()) * mp.log(s)
            return +(self.prefactor * total)

    def radial_residual(self, r):
        """|G0| - radial_series at separation r, with I evaluated by quadrature."""
        with mp.workdps(self.dps):
            s = mp.mpf(self.setup.b) * mp.mpf(r) ** 2 / 4
            exact = self.prefactor * eval_I(s, self.setup.d, self.dps)
            return +(exact - self.radial_series(r))

    def evaluate(self, z, zeta) -> complex:
        """Truncated expansion of G0(z, zeta), phase included."""
        z = as_complex_point(z, self.setup.d)
        zeta = as_complex_point(zeta, self.setup.d)
        r = float(np.sqrt(np.sum(np.abs(z - zeta) ** 2)))
        if r == 0.0:
            raise ValueError("the expansion is singular on the diagonal")
        phase = complex(magnetic_phase(z, zeta, self.setup.b, axis=-1))
        return complex(self.radial_series(r)) * phase

    def leading_term(self, r):
        """(1/2pi) log(1/r) for d = 1, leading_coefficient * r^{2-2d} otherwise."""
        r = np.asarray(r, dtype=float)
        if self.setup.d == 1:
            return self.leading_coefficient * np.log(1.0 / r)
        return self.leading_coefficient * r ** (2 - 2 * self.setup.d)

    def a_coefficient(self, j: int, z, zeta) -> complex:
        """
        a_j(z, zeta): coefficient of r^{2-2d+2j}, the phase included.

        For d = 1 and j = 0 this is the constant left after removing
        (1/2pi) log(1/r).
        """
        d, b = self.setup.d, self.setup.b
        J = j + 1 - d
        if J not in self.power_coeffs:
            raise ValueError(f"a_{j} is not part of an order-{self.N} expansion")
        with mp.workdps(self.dps):
            quarter = mp.mpf(b) / 4
            value = self.power_coeffs[J] - self.log_coeffs.get(J, 0) * mp.log(quarter)
            value *= self.prefactor * quarter ** J
        return complex(value) * complex(magnetic_phase(as_complex_point(z, d), as_complex_point(zeta, d), b, axis=-1))

    def b_coefficient(self, j: int, z, zeta) -> complex:
        """b_j(z, zeta): coefficient of r^{2-2d+2j} log r, the phase included."""
        d, b = self.setup.d, self.setup.b
        J = j + 1 - d
        if J not in self.log_coeffs:
            raise ValueError(f"b_{j} is not part of an order-{self.N} expansion")
        with mp.workdps(self.dps):
            quarter = mp.mpf(b) / 4
            value = -2 * self.log_coeffs[J] * self.prefactor * quarter ** J
        return complex(value) * complex(magnetic_phase(as_complex_point(z, d), as_complex_point(zeta, d), b, axis=-1))


def singular_expansion(setup: MagneticSetup, N: int, dps: Optional[int] = None) -> KernelExpansion:
    """
    Build the near-diagonal expansion of G0 to order N.

    Args:
        setup (MagneticSetup): Field strength and half-dimension.
        N (int): Expansion order, N >= d.
        dps (int, optional): Working precision of the coefficients.

    Returns:
        KernelExpansion: Power and log coefficients of the s-series of I.
    """
    d = setup.d
    if int(N) != N or N < d:
        raise ValueError(f"expansion order must satisfy N >= d = {d}, got N={N}")
    dps = dps or Config.QUADRATURE_DPS
    top = N - d
    coeffs = expansion_coeffs(d, max(top, 1), 'derived', dps)

    power, logs = {}, {}
    with mp.workdps(dps):
        a = split_point()
        negative = {j: coeffs.c[j] for j in range(1 - d, 0)}
        for J in range(1 - d, top + 1):
            # exp(-s a) c_j s^j re-expanded into powers of s
            value = mp.fsum(c * (-a) ** (J - j) / mp.factorial(J - j) for j, c in negative.items() if j <= J)
            if J >= 0:
                value += eval_Iinf_derivative(J, d, dps) / mp.factorial(J) - coeffs.c_prime[J]
                logs[J] = coeffs.d_coef[J]
            power[J] = value

    if d == 1:
        leading = printed = 1 / (2 * pi)
    else:
        leading = gamma(d - 1) / (4 * pi ** d)
        printed = gamma(d - 1) / (2 * pi ** d)
    expansion = KernelExpansion(
        setup=setup,
        N=N,
        leading_coefficient=leading,
        printed_leading_coefficient=printed,
        power_coeffs=power,
        log_coeffs=logs,
        remainder_order=2 * N - 2 * d + 2,
        remainder_has_log=(d % 2 == 1 and (top + 1) % 2 == 0),
        dps=dps,
    )
    logger.debug(f"Kernel expansion d={d} N={N}: powers s^{1 - d}..s^{top}")
    return expansion
