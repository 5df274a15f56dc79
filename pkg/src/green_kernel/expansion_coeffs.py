"""
Small-s expansion of I0 and the incomplete-gamma helpers behind it.

    I0(s) = sum_{j=1-d}^{N} (exp(-s a) c_j - c'_j) s^j - sum_{j=0}^{N} d_j s^j log s + O(s^{N+1} log s)

Two coefficient conventions are produced:

- ``derived``: termwise integration of the binomial series of
  (1 - u^{-2})^{(d-2)/2} against exp(-s u) u^{d-2-2k} on [a, inf). Powers
  u^m with m >= 0 give exp(-s a) times negative powers of s; powers with
  m < 0 give upper incomplete gamma functions of negative order, whose
  exp(-s a) parts with non-negative powers of s are re-expanded into the
  c' coefficients. Hence c_j = 0 for every j >= 0.
- ``printed``: the closed forms as they are usually quoted, kept verbatim so
  that their deviation from the quadrature ground truth can be reported
  (coefficient_audit).

The printed closed form of g_m(t) = int_t^inf exp(-u) u^m du with the
Pochhammer symbol (m)_{j+1} does not reduce to exp(-t) at m = 0; with
(m)_j instead (falling factorial) the closed form is exact for m >= 0.
printed_g_m exposes both readings.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Optional

import mpmath as mp
import pandas as pd

from config import Config
from core.errors import TruncationError
from .i_integral import split_point, eval_I0

logger = logging.getLogger(__name__)

CONVENTIONS = ('derived', 'printed')


@dataclass
class ExpansionCoeffs:
    """
    Coefficient table of the I0 expansion.

    Attributes:
        d (int): Half-dimension.
        N (int): Truncation order.
        c (dict): j -> c_j for 1-d <= j <= N.
        c_prime (dict): j -> c'_j for 0 <= j <= N.
        d_coef (dict): j -> d_j for 0 <= j <= N.
        convention (str): 'derived' or 'printed'.
        dps (int): Decimal digits the coefficients were computed with.
        series_terms (int): Number of binomial terms summed.
    """
    d: int
    N: int
    c: Dict[int, object] = field(default_factory=dict)
    c_prime: Dict[int, object] = field(default_factory=dict)
    d_coef: Dict[int, object] = field(default_factory=dict)
    convention: str = 'derived'
    dps: int = Config.QUADRATURE_DPS
    series_terms: int = 0

    def is_finite(self) -> bool:
        values = list(self.c.values()) + list(self.c_prime.values()) + list(self.d_coef.values())
        return all(mp.isfinite(v) for v in values)

    def to_frame(self) -> pd.DataFrame:
        """Rows (kind, j, value) with values as decimal strings."""
        rows = []
        for kind, table in (('c', self.c), ('c_prime', self.c_prime), ('d', self.d_coef)):
            for j in sorted(table):
                rows.append({'kind': kind, 'j': j, 'value': mp.nstr(table[j], self.dps)})
        return pd.DataFrame(rows, columns=['kind', 'j', 'value'])


def incomplete_gamma_tail(m: int, t, dps: Optional[int] = None):
    """g_m(t) = int_t^inf exp(-u) u^m du = Gamma(m+1, t), any integer m."""
    with mp.workdps(dps or Config.QUADRATURE_DPS):
        return +mp.gammainc(m + 1, mp.mpf(t))


def printed_g_m(m: int, t, pochhammer: str = 'printed', dps: Optional[int] = None):
    """
    Closed form of g_m(t) as printed, for comparison with incomplete_gamma_tail.

    Args:
        m (int): Order.
        t: Positive argument.
        pochhammer (str): 'printed' uses (m)_{j+1} in the m >= 0 branch,
            'falling' uses (m)_j. The m < 0 branch is identical in both
            readings; the j = 0 term of its series (0/0) is omitted.
        dps (int, optional): Working precision.
    """
    if pochhammer not in ('printed', 'falling'):
        raise ValueError(f"unknown Pochhammer reading '{pochhammer}'")
    with mp.workdps(dps or Config.QUADRATURE_DPS):
        t = mp.mpf(t)
        if m >= 0:
            shift = 1 if pochhammer == 'printed' else 0
            total = mp.fsum(mp.ff(m, j + shift) * t ** (m - j) for j in range(m + 1))
            return mp.exp(-t) * total
        n = -m - 1
        head = mp.fsum(t ** (m + j) / mp.ff(n, j) for j in range(1, n + 1))
        series = mp.nsum(lambda j: (-1) ** j * t ** j / (j * mp.factorial(j)), [1, mp.inf])
        return mp.exp(-t) * head - (mp.euler + mp.log(t) + series) / mp.factorial(n)


def _binomial_terms(d: int):
    """Yield (k, beta_k) with beta_k = (-1)^k binom((d-2)/2, k)."""
    alpha = mp.mpf(d - 2) / 2
    beta = mp.mpf(1)
    k = 0
    while True:
        yield k, beta
        beta = -beta * (alpha - k) / (k + 1)
        k += 1


def _derived_coefficients(d: int, N: int) -> ExpansionCoeffs:
    a = split_point()
    coeffs = ExpansionCoeffs(d, N)
    coeffs.c = {j: mp.mpf(0) for j in range(1 - d, N + 1)}
    coeffs.c_prime = {j: mp.mpf(0) for j in range(N + 1)}
    coeffs.d_coef = {j: mp.mpf(0) for j in range(N + 1)}
    log_constant = mp.euler + mp.log(a)
    tolerance = min(mp.mpf(Config.SERIES_RTOL), mp.mpf(10) ** (5 - mp.mp.dps))

    for k, beta in _binomial_terms(d):
        if k >= Config.MAX_SERIES_TERMS:
            raise TruncationError(f"binomial series for d={d} did not converge in {k} terms",
                                  module=__name__)
        m = d - 2 * k - 2
        if m >= 0:
            # int_a^inf exp(-su) u^m du = exp(-sa) sum_i m!/i! a^i s^{i-m-1}
            for i in range(m + 1):
                coeffs.c[i - m - 1] += beta * mp.factorial(m) / mp.factorial(i) * a ** i
            continue
        if beta == 0:
            break
        n = -m - 1
        # s^n Gamma(-n, s a): exp(-sa) part lands on s^0 .. s^{n-1}
        largest = mp.mpf(0)
        for j in range(min(n - 1, N) + 1):
            term = beta * (-1) ** j * mp.factorial(n - j - 1) / mp.factorial(n) * a ** (j - n)
            coeffs.c[j] += term
            largest = max(largest, abs(term))
        if n <= N:
            weight = beta * (-1) ** n / mp.factorial(n)
            coeffs.c_prime[n] += weight * log_constant
            coeffs.d_coef[n] += weight
            for i in range(1, N - n + 1):
                coeffs.c_prime[n + i] += weight * (-1) ** i * a ** i / (i * mp.factorial(i))
        else:
            scale = max([abs(coeffs.c[j]) for j in range(N + 1)] + [mp.mpf(1)])
            if largest < tolerance * scale:
                coeffs.series_terms = k + 1
                break

    # re-expand exp(-sa) c_j s^j, j >= 0, into the pure power coefficients
    for J in range(N + 1):
        coeffs.c_prime[J] -= mp.fsum(coeffs.c[j] * (-a) ** (J - j) / mp.factorial(J - j) for j in range(J + 1))
    for j in range(N + 1):
        coeffs.c[j] = mp.mpf(0)
    return coeffs


def _printed_sum(d: int, j: int, a):
    alpha = mp.mpf(d - 2) / 2
    total = mp.mpf(0)
    for k in range(1, j + 1):
        if (j - k - d) % 2 != 1:
            continue
        sign = (-1) ** ((j + k + d - 1) // 2)
        total += sign * a ** k / (mp.factorial(j - k) * k * mp.factorial(k)) \
            * mp.binomial(alpha, (j - k + d - 1) // 2)
    return total


def _printed_coefficients(d: int, N: int) -> ExpansionCoeffs:
    a = split_point()
    alpha = mp.mpf(d - 2) / 2
    coeffs = ExpansionCoeffs(d, N, convention='printed')
    for j in range(1 - d, 0):
        upper = (d - j) // 2 - 1
        coeffs.c[j] = mp.fsum((-1) ** k * mp.binomial(alpha, k) * mp.ff(d - 2 * (k + 1), j + 1)
                              * a ** (d - 2 * k - 1 - j) for k in range(upper + 1))
    for j in range(0, N + 1):
        if j > d - 2:
            coeffs.c[j] = mp.mpf(0)
            continue
        start = max(-(-(d - j - 1) // 2) - 1, 0)
        total = mp.mpf(0)
        for k in range(start, start + Config.MAX_SERIES_TERMS):
            binom = mp.binomial(alpha, k)
            denominator = mp.ff(2 * k + 1 - d, j + 1)
            if denominator == 0:
                total = mp.nan
                break
            term = (-1) ** k * binom * a ** (d - 2 * k - 1 + j) / denominator
            total += term
            if binom == 0 or abs(term) < Config.SERIES_RTOL * max(abs(total), 1):
                break
        coeffs.c[j] = total
    for j in range(N + 1):
        if j == 0:
            coeffs.c_prime[0] = mp.euler + mp.log(a) + 1 if d % 2 == 1 else mp.mpf(0)
            coeffs.d_coef[0] = mp.mpf(0)
            continue
        partial = _printed_sum(d, j, a)
        coeffs.d_coef[j] = partial
        if (j - d) % 2 == 1:
            partial += (-1) ** ((j + d - 1) // 2) / mp.factorial(j) \
                * mp.binomial(alpha, (j + d - 1) // 2) * (mp.euler + mp.log(a) + 1)
        coeffs.c_prime[j] = partial
    return coeffs


def expansion_coeffs(d: int, N: int, convention: str = 'derived', dps: Optional[int] = None) -> ExpansionCoeffs:
    """
    Compute the coefficient table of the small-s expansion of I0.

    Args:
        d (int): Half-dimension.
        N (int): Truncation order, N >= 1.
        convention (str): 'derived' (quadrature-consistent) or 'printed'.
        dps (int, optional): Working precision in decimal digits.

    Returns:
        ExpansionCoeffs: The table, with values as mpmath numbers.
    """
    if int(d) != d or d < 1:
        raise ValueError(f"half-dimension must be a positive integer, got d={d}")
    if int(N) != N or N < 1:
        raise ValueError(f"truncation order must be at least 1, got N={N}")
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention '{convention}', expected one of {CONVENTIONS}")
    dps = dps or Config.QUADRATURE_DPS
    with mp.workdps(dps):
        if convention == 'derived':
            coeffs = _derived_coefficients(d, N)
        else:
            coeffs = _printed_coefficients(d, N)
    coeffs.dps = dps
    logger.debug(f"Expansion coefficients d={d} N={N} ({convention}): {coeffs.series_terms} series terms")
    return coeffs


def eval_I0_expansion(s, d: int, coeffs: ExpansionCoeffs):
    """
    Evaluate the truncated small-s expansion of I0.

    The remainder is O(s^{N+1} log s).

    Args:
        s: Argument with 0 < s < 1.
        d (int): Half-dimension (must match the table).
        coeffs (ExpansionCoeffs): Coefficient table.

    Returns:
        mpmath.mpf: Expansion value.
    """
    if coeffs.d != d:
        raise ValueError(f"coefficient table is for d={coeffs.d}, not d={d}")
    if not 0 < s < 1:
        raise ValueError(f"the expansion is valid for 0 < s < 1, got s={s}")
    with mp.workdps(coeffs.dps):
        s = mp.mpf(s)
        damping = mp.exp(-s * split_point())
        total = mp.fsum(damping * coeffs.c[j] * s ** j for j in range(1 - d, coeffs.N + 1))
        total -= mp.fsum(coeffs.c_prime[j] * s ** j for j in range(coeffs.N + 1))
        total -= mp.fsum(coeffs.d_coef[j] * s ** j for j in range(coeffs.N + 1)) * mp.log(s)
        return +total


def coefficient_audit(d: int, N: int, samples=(1e-2, 1e-3, 1e-4), dps: Optional[int] = None) -> pd.DataFrame:
    """
    Compare the printed and derived coefficient tables against quadrature.

    Returns one row per (kind, j) with both values and their difference,
    followed by one row per sample s with the expansion error of each
    convention measured against eval_I0.
    """
    dps = dps or max(Config.QUADRATURE_DPS, 50)
    derived = expansion_coeffs(d, N, 'derived', dps)
    printed = expansion_coeffs(d, N, 'printed', dps)
    rows = []
    with mp.workdps(dps):
        for kind, left, right in (('c', derived.c, printed.c),
                                  ('c_prime', derived.c_prime, printed.c_prime),
                                  ('d', derived.d_coef, printed.d_coef)):
            for j in sorted(left):
                difference = left[j] - right[j]
                rows.append({'kind': kind, 'j': j, 'derived': mp.nstr(left[j], 17),
                             'printed': mp.nstr(right[j], 17), 'difference': mp.nstr(difference, 6)})
        for s in samples:
            truth = eval_I0(s, d, dps)
            rows.append({'kind': 'residual', 'j': None, 's': s,
                         'derived': mp.nstr(eval_I0_expansion(s, d, derived) - truth, 6),
                         'printed': mp.nstr(eval_I0_expansion(s, d, printed) - truth, 6)})
    frame = pd.DataFrame(rows, columns=['kind', 'j', 's', 'derived', 'printed', 'difference'])
    logger.info(f"Coefficient audit for d={d}, N={N}: {len(frame)} rows")
    return frame
