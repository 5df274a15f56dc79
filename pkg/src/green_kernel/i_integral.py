"""
The profile integral I(s) of the resolvent kernel and its split at t = 1.

    I(s)     = int_0^inf exp(-s coth t) / sinh^d t dt
             = int_1^inf exp(-s u) (u^2 - 1)^{(d-2)/2} du        (u = coth t)
    I0(s)    = the part t in (0, 1], i.e. u >= a = coth(1)
    Iinf(s)  = the part t >= 1, i.e. 1 <= u <= a

Quadratures run in mpmath (tanh-sinh) after the further substitution
u = cosh w, which turns (u^2 - 1)^{(d-2)/2} du into sinh^{d-1} w dw and removes
the endpoint singularity at u = 1 for d = 1. Breakpoints are placed where
s cosh w crosses 1, 4, 16 and 64 so the exponential cut-off is resolved. The
infinite range stops at u_lo + T/s, where the integrand has decayed by
exp(-T) relative to its value at the lower end, T = max(QUADRATURE_TAIL, 3 dps);
quadrature nodes at huge w would make cosh w double-exponentially large.

The closed form I(s) = Gamma(d/2)/sqrt(pi) (2/s)^nu K_nu(s), nu = (d-1)/2,
is available vectorized in double precision through scipy (bessel_I).
"""

import logging
from dataclasses import dataclass
from typing import Optional

import mpmath as mp
import numpy as np
from scipy import special

from config import Config
from core.errors import QuadratureError

logger = logging.getLogger(__name__)

# s cosh w values at which the integrand changes regime
_BREAK_LEVELS = (1.0, 4.0, 16.0, 64.0)


def split_point():
    """a = coth(1), the image of the split point t = 1 under u = coth t."""
    return mp.coth(1)


def _check_dimension(d: int):
    if int(d) != d or d < 1:
        raise ValueError(f"half-dimension must be a positive integer, got d={d}")


def _check_positive(s):
    if not s > 0:
        raise ValueError(f"I(s) diverges for s <= 0, got s={s}")


def _w_breakpoints(s, w_lo, w_hi):
    points = [w_lo]
    if s > 0:
        for level in _BREAK_LEVELS:
            ratio = mp.mpf(level) / s
            if ratio > 1:
                w = mp.acosh(ratio)
                if w_lo < w < w_hi:
                    points.append(w)
    points.append(w_hi)
    return sorted(set(points))


def _tail_length():
    """Decay exponent at which infinite ranges stop, at least 3 dps."""
    return mp.mpf(max(Config.QUADRATURE_TAIL, 3 * mp.mp.dps))


def _tail_cutoff(s, w_lo):
    """Upper w-limit replacing infinity: cosh w = cosh w_lo + tail/s."""
    return mp.acosh(mp.cosh(w_lo) + _tail_length() / s)


def _quad(integrand, points, what: str):
    value, error = mp.quad(integrand, points, error=True, maxdegree=10)
    scale = abs(value) if value != 0 else mp.mpf(1)
    if error > Config.QUADRATURE_RTOL * scale:
        raise QuadratureError(f"{what}: estimated error {mp.nstr(error, 3)} exceeds tolerance "
                              f"for value {mp.nstr(value, 10)}", module=__name__)
    return value


def _profile_integral(s, d: int, w_lo, w_hi, power: int = 0):
    """int_{w_lo}^{w_hi} (-cosh w)^power exp(-s cosh w) sinh^{d-1} w dw."""
    def integrand(w):
        u = mp.cosh(w)
        return (-u) ** power * mp.exp(-s * u) * mp.sinh(w) ** (d - 1)

    return _quad(integrand, _w_breakpoints(s, w_lo, w_hi), f"I-profile quadrature (s={mp.nstr(s, 6)}, d={d})")


def eval_I(s, d: int, dps: Optional[int] = None):
    """
    Evaluate I(s) by quadrature in the u = cosh w variable.

    Args:
        s: Positive argument.
        d (int): Half-dimension.
        dps (int, optional): Decimal digits of the mpmath working precision.

    Returns:
        mpmath.mpf: I(s).
    """
    _check_dimension(d)
    _check_positive(s)
    with mp.workdps(dps or Config.QUADRATURE_DPS):
        s = mp.mpf(s)
        return +_profile_integral(s, d, mp.mpf(0), _tail_cutoff(s, mp.mpf(0)))


def eval_I0(s, d: int, dps: Optional[int] = None):
    """I0(s) = int_a^inf exp(-s u)(u^2 - 1)^{(d-2)/2} du, the t in (0, 1] part of I."""
    _check_dimension(d)
    _check_positive(s)
    with mp.workdps(dps or Config.QUADRATURE_DPS):
        s, w_a = mp.mpf(s), mp.acosh(split_point())
        return +_profile_integral(s, d, w_a, _tail_cutoff(s, w_a))


def eval_Iinf(s, d: int, dps: Optional[int] = None):
    """
    Iinf(s) = int_1^a exp(-s u)(u^2 - 1)^{(d-2)/2} du, the t >= 1 part of I.

    The range of integration is compact, so any real s is accepted.
    """
    _check_dimension(d)
    with mp.workdps(dps or Config.QUADRATURE_DPS):
        return +_profile_integral(mp.mpf(s), d, mp.mpf(0), mp.acosh(split_point()))


def eval_Iinf_derivative(k: int, d: int, dps: Optional[int] = None):
    """k-th derivative of Iinf at s = 0: int_1^a (-u)^k (u^2 - 1)^{(d-2)/2} du."""
    _check_dimension(d)
    if k < 0:
        raise ValueError("derivative order must be non-negative")
    with mp.workdps(dps or Config.QUADRATURE_DPS):
        return +_profile_integral(mp.mpf(0), d, mp.mpf(0), mp.acosh(split_point()), power=k)


def eval_dI(s, d: int, dps: Optional[int] = None):
    """I'(s) = -int_1^inf u exp(-s u)(u^2 - 1)^{(d-2)/2} du by quadrature."""
    _check_dimension(d)
    _check_positive(s)
    with mp.workdps(dps or Config.QUADRATURE_DPS):
        s = mp.mpf(s)
        return +_profile_integral(s, d, mp.mpf(0), _tail_cutoff(s, mp.mpf(0)), power=1)


def eval_I_direct(s, d: int, part: str = 'full', dps: Optional[int] = None):
    """
    Quadrature of I, I0 or Iinf in the original variable t.

    Serves as an oracle independent of the u-substitution. The integrand
    exp(-s coth t)/sinh^d t is concentrated near t ~ s/d for small s, so
    geometric breakpoints s/100 ... 100 s are inserted below t = 1.

    Args:
        s: Positive argument.
        d (int): Half-dimension.
        part (str): 'full', 'I0' (t in (0, 1]) or 'Iinf' (t >= 1).
        dps (int, optional): Decimal digits of the working precision.
    """
    _check_dimension(d)
    _check_positive(s)
    if part not in ('full', 'I0', 'Iinf'):
        raise ValueError(f"unknown part '{part}'")
    with mp.workdps(dps or Config.QUADRATURE_DPS):
        s = mp.mpf(s)

        def integrand(t):
            if t == 0:
                return mp.mpf(0)
            return mp.exp(-s * mp.coth(t)) / mp.sinh(t) ** d

        lower = [mp.mpf(0)] + [s * mp.mpf(10) ** k for k in range(-2, 3) if s * mp.mpf(10) ** k < 1] + [mp.mpf(1)]
        # 1/sinh^d t ~ 2^d exp(-d t) is cut once it falls by exp(-tail)
        upper = [mp.mpf(1), mp.mpf(4), mp.mpf(16), mp.mpf(16) + _tail_length() / d]
        what = f"t-domain quadrature (s={mp.nstr(s, 6)}, d={d}, part={part})"
        if part == 'I0':
            return +_quad(integrand, lower, what)
        if part == 'Iinf':
            return +_quad(integrand, upper, what)
        return +_quad(integrand, lower[:-1] + upper, what)


@dataclass(frozen=True)
class ISplit:
    """
    The two pieces of I at one argument.

    Attributes:
        s: Argument.
        d (int): Half-dimension.
        value_I0: I0(s).
        value_Iinf: Iinf(s).
    """
    s: object
    d: int
    value_I0: object
    value_Iinf: object

    @property
    def total(self):
        return self.value_I0 + self.value_Iinf


def split_I(s, d: int, dps: Optional[int] = None) -> ISplit:
    """Evaluate both pieces of I at s."""
    return ISplit(s, d, eval_I0(s, d, dps), eval_Iinf(s, d, dps))


# --- closed forms (double precision, vectorized) ---

def _bessel_prefactor(d: int) -> float:
    return special.gamma(d / 2.0) / np.sqrt(np.pi) * 2.0 ** ((d - 1) / 2.0)


def bessel_I(s, d: int):
    """
    I(s) through the modified Bessel function of the second kind.

    I(s) = Gamma(d/2)/sqrt(pi) (2/s)^nu K_nu(s) with nu = (d-1)/2; for d = 1
    this is K_0(s).
    """
    _check_dimension(d)
    s = np.asarray(s, dtype=float)
    if np.any(s <= 0):
        raise ValueError("I(s) diverges for s <= 0")
    if d == 1:
        return special.k0(s)
    nu = (d - 1) / 2.0
    return _bessel_prefactor(d) * s ** (-nu) * special.kv(nu, s)


def bessel_dI(s, d: int):
    """I'(s) = -Gamma(d/2)/sqrt(pi) 2^nu s^{-nu} K_{nu+1}(s); for d = 1, -K_1(s)."""
    _check_dimension(d)
    s = np.asarray(s, dtype=float)
    if np.any(s <= 0):
        raise ValueError("I(s) diverges for s <= 0")
    if d == 1:
        return -special.k1(s)
    nu = (d - 1) / 2.0
    return -_bessel_prefactor(d) * s ** (-nu) * special.kv(nu + 1, s)
