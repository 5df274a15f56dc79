"""
Exact creation/annihilation algebra on polynomial-Gaussian functions.

A PolynomialGaussian is f = p(z, zbar) exp(-Psi) with Psi = b|z|^2/4 and p a
polynomial in the d complex variables and their conjugates (treated as
independent symbols). The class is closed under

    Q_j    = -2i exp(-Psi) d/dzbar_j exp(Psi)   ->  p  ->  -2i dp/dzbar_j
    Qbar_j = -2i exp(Psi)  d/dz_j    exp(-Psi)  ->  p  ->  -2i (dp/dz_j - (b/2) zbar_j p)

so every identity of the algebra can be checked coefficient by coefficient
with sympy. With A0 = 1/2(-x2, x1) these are Q_j = -2i D_{zbar_j} and
Qbar_j = -2i D_{z_j} for the covariant derivative D = grad - i b A0, and the
lowest level consists of the holomorphic p.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Tuple

import numpy as np
import sympy as sp

from .magnetic_setup import MagneticSetup


@lru_cache(maxsize=None)
def complex_symbols(d: int) -> Tuple[Tuple[sp.Symbol, ...], Tuple[sp.Symbol, ...]]:
    """Return the symbols (z_1..z_d) and (zbar_1..zbar_d)."""
    z = sp.symbols(f'z1:{d + 1}')
    zbar = sp.symbols(f'zbar1:{d + 1}')
    return tuple(z), tuple(zbar)


@dataclass(frozen=True)
class PolynomialGaussian:
    """
    Polynomial part p of f = p exp(-b|z|^2/4).

    Attributes:
        d (int): Number of complex variables.
        b: Field strength as a sympy number (exact arithmetic).
        expr (sympy.Expr): Polynomial in z_j and zbar_j.
    """
    d: int
    b: sp.Expr
    expr: sp.Expr

    @classmethod
    def from_coefficients(cls, setup: MagneticSetup, coefficients: Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], complex]):
        """
        Build a sample from a table {(alpha, beta): c} of monomials z^alpha zbar^beta.

        Float coefficients are converted to exact rationals, so every
        subsequent operation is exact.
        """
        z, zbar = complex_symbols(setup.d)
        expr = sp.Integer(0)
        for (alpha, beta), value in coefficients.items():
            if len(alpha) != setup.d or len(beta) != setup.d:
                raise ValueError("multi-indices must have length d")
            coefficient = sp.nsimplify(complex(value).real, rational=True) \
                + sp.I * sp.nsimplify(complex(value).imag, rational=True)
            monomial = sp.Mul(*[zi ** a for zi, a in zip(z, alpha)], *[wi ** c for wi, c in zip(zbar, beta)])
            expr += coefficient * monomial
        return cls(setup.d, sp.nsimplify(setup.b, rational=True), sp.expand(expr))

    @classmethod
    def constant(cls, setup: MagneticSetup, value=1):
        """The sample p = value (for value = 1 the lowest-level vacuum)."""
        return cls(setup.d, sp.nsimplify(setup.b, rational=True), sp.sympify(value))

    def coefficients(self) -> Dict[Tuple[int, ...], sp.Expr]:
        """Coefficient table keyed by the exponent vector (alpha..., beta...)."""
        z, zbar = complex_symbols(self.d)
        expr = sp.expand(self.expr)
        if expr == 0:
            return {}
        return dict(sp.Poly(expr, *z, *zbar).terms())

    def __add__(self, other):
        self._check_compatible(other)
        return PolynomialGaussian(self.d, self.b, sp.expand(self.expr + other.expr))

    def __sub__(self, other):
        self._check_compatible(other)
        return PolynomialGaussian(self.d, self.b, sp.expand(self.expr - other.expr))

    def scale(self, factor):
        """Multiply the polynomial part by a scalar."""
        return PolynomialGaussian(self.d, self.b, sp.expand(sp.sympify(factor) * self.expr))

    def equals(self, other) -> bool:
        """Coefficient-exact equality."""
        self._check_compatible(other)
        return sp.expand(self.expr - other.expr) == 0

    def is_zero(self) -> bool:
        return sp.expand(self.expr) == 0

    def evaluate(self, z: np.ndarray) -> np.ndarray:
        """
        Numerically evaluate p(z, zbar) exp(-b|z|^2/4).

        Args:
            z (np.ndarray): Complex points with trailing axis of length d.
        """
        zs, zbars = complex_symbols(self.d)
        poly = sp.lambdify((*zs, *zbars), self.expr, 'numpy')
        z = np.asarray(z, dtype=complex)
        coords = [z[..., j] for j in range(self.d)]
        values = poly(*coords, *[np.conj(c) for c in coords]) * np.ones(z.shape[:-1])
        weight = np.exp(-float(self.b) * np.sum(np.abs(z) ** 2, axis=-1) / 4.0)
        return values * weight

    def _check_compatible(self, other):
        if self.d != other.d or self.b != other.b:
            raise ValueError("samples belong to different magnetic setups")


def _check_axis(f: PolynomialGaussian, j: int):
    if not 1 <= j <= f.d:
        raise ValueError(f"axis index must satisfy 1 <= j <= {f.d}, got j={j}")


def apply_annihilation(setup: MagneticSetup, j: int, f: PolynomialGaussian) -> PolynomialGaussian:
    """
    Apply Q_j exactly.

    Args:
        setup (MagneticSetup): Field strength and dimension (must match f).
        j (int): Axis index, 1 <= j <= d.
        f (PolynomialGaussian): Sample.

    Returns:
        PolynomialGaussian: Q_j f.
    """
    _check_setup(setup, f)
    _check_axis(f, j)
    _, zbar = complex_symbols(f.d)
    return PolynomialGaussian(f.d, f.b, sp.expand(-2 * sp.I * sp.diff(f.expr, zbar[j - 1])))


def apply_creation(setup: MagneticSetup, j: int, f: PolynomialGaussian) -> PolynomialGaussian:
    """
    Apply Qbar_j exactly.

    Args:
        setup (MagneticSetup): Field strength and dimension (must match f).
        j (int): Axis index, 1 <= j <= d.
        f (PolynomialGaussian): Sample.

    Returns:
        PolynomialGaussian: Qbar_j f.
    """
    _check_setup(setup, f)
    _check_axis(f, j)
    z, zbar = complex_symbols(f.d)
    raised = sp.diff(f.expr, z[j - 1]) - f.b / 2 * zbar[j - 1] * f.expr
    return PolynomialGaussian(f.d, f.b, sp.expand(-2 * sp.I * raised))


def apply_hamiltonian(setup: MagneticSetup, f: PolynomialGaussian) -> PolynomialGaussian:
    """Apply L = sum_j Qbar_j Q_j + b d."""
    _check_setup(setup, f)
    total = f.scale(f.b * f.d)
    for j in range(1, f.d + 1):
        total = total + apply_creation(setup, j, apply_annihilation(setup, j, f))
    return total


def commutator(setup: MagneticSetup, j: int, k: int, f: PolynomialGaussian) -> PolynomialGaussian:
    """Return [Q_j, Qbar_k] f."""
    return (apply_annihilation(setup, j, apply_creation(setup, k, f))
            - apply_creation(setup, k, apply_annihilation(setup, j, f)))


def gaussian_inner_product(f: PolynomialGaussian, g: PolynomialGaussian) -> sp.Expr:
    """
    Exact L^2(R^{2d}) inner product <f, g> = integral conj(f) g.

    Uses the Gaussian moments
    integral z^a zbar^c exp(-b|z|^2/2) dx = delta_{ac} pi a! (2/b)^{a+1}
    in each plane; conj(z^alpha zbar^beta) = z^beta zbar^alpha.
    """
    f._check_compatible(g)
    left = f.coefficients()
    right = g.coefficients()
    d = f.d
    total = sp.Integer(0)
    for exps_f, coef_f in left.items():
        alpha_f, beta_f = exps_f[:d], exps_f[d:]
        for exps_g, coef_g in right.items():
            alpha_g, beta_g = exps_g[:d], exps_g[d:]
            term = sp.conjugate(coef_f) * coef_g
            for j in range(d):
                holomorphic = beta_f[j] + alpha_g[j]
                antiholomorphic = alpha_f[j] + beta_g[j]
                if holomorphic != antiholomorphic:
                    term = 0
                    break
                term *= sp.pi * sp.factorial(holomorphic) * (2 / f.b) ** (holomorphic + 1)
            total += term
    return sp.simplify(total)


def _check_setup(setup: MagneticSetup, f: PolynomialGaussian):
    if setup.d != f.d or sp.nsimplify(setup.b, rational=True) != f.b:
        raise ValueError("sample does not belong to the given magnetic setup")
