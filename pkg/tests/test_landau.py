"""
Tests for the landau package: levels, creation/annihilation algebra and the
projection kernel of a Landau level.
"""

import numpy as np
import pytest
import sympy as sp

from landau import (LandauIndex, MagneticSetup, PolynomialGaussian, apply_annihilation, apply_creation,
                    apply_hamiltonian, apply_hamiltonian_fd, commutator, eigen_residual, gaussian_inner_product,
                    kernel_composition, landau_level, magnetic_phase, projection_kernel, wedge)
from landau.polynomial_gaussian import complex_symbols


class TestLandauLevel:
    """Lambda_q = (2(q-1) + d) b."""

    def test_lowest_level_unit_field(self):
        assert landau_level(MagneticSetup(1.0, 1), 1) == 1

    def test_four_dimensional_second_level(self):
        assert landau_level(MagneticSetup(3.0, 2), 2) == 12

    @pytest.mark.parametrize("q", [2, 3, 7, 20])
    def test_constant_gap(self, q):
        setup = MagneticSetup(1.0, 1)
        assert landau_level(setup, q) - landau_level(setup, q - 1) == 2

    def test_accepts_index_object(self):
        assert landau_level(MagneticSetup(2.0, 1), LandauIndex(3)) == 10

    @pytest.mark.parametrize("b, d", [(0.0, 1), (-1.0, 1), (1.0, 0), (1.0, 1.5)])
    def test_invalid_setup(self, b, d):
        with pytest.raises(ValueError):
            MagneticSetup(b, d)

    def test_invalid_index(self):
        with pytest.raises(ValueError):
            LandauIndex(0)


class TestLadderAlgebra:
    """Exact action of Q_j and Qbar_j on polynomial-Gaussian samples."""

    def test_vacuum_is_annihilated(self):
        setup = MagneticSetup(2.0, 2)
        vacuum = PolynomialGaussian.constant(setup)
        for j in (1, 2):
            assert apply_annihilation(setup, j, vacuum).is_zero()

    @pytest.mark.parametrize("j, k", [(1, 1), (1, 2), (2, 1), (2, 2)])
    def test_commutator(self, j, k):
        setup = MagneticSetup(1.5, 2)
        sample = PolynomialGaussian.from_coefficients(setup, {
            ((1, 0), (0, 0)): 1.0,
            ((0, 2), (1, 1)): 0.5 - 2.0j,
            ((0, 0), (0, 3)): 3.0,
        })
        expected = sample.scale(2 * sample.b) if j == k else sample.scale(0)
        assert commutator(setup, j, k, sample).equals(expected)

    def test_hamiltonian_on_vacuum(self):
        setup = MagneticSetup(1.0, 1)
        vacuum = PolynomialGaussian.constant(setup)
        level = landau_level(setup, 1)
        assert apply_hamiltonian(setup, vacuum).equals(vacuum.scale(level))

    def test_creation_raises_level(self):
        setup = MagneticSetup(1.0, 1)
        raised = apply_creation(setup, 1, PolynomialGaussian.constant(setup))
        assert apply_hamiltonian(setup, raised).equals(raised.scale(landau_level(setup, 2)))

    def test_holomorphic_samples_on_lowest_level(self):
        setup = MagneticSetup(1.0, 1)
        sample = PolynomialGaussian.from_coefficients(setup, {((3,), (0,)): 1.0, ((1,), (0,)): 2.0})
        assert apply_annihilation(setup, 1, sample).is_zero()

    def test_gaussian_norm(self):
        """int exp(-b|z|^2/2) dx = 2 pi / b."""
        setup = MagneticSetup(1.0, 1)
        vacuum = PolynomialGaussian.constant(setup)
        assert sp.simplify(gaussian_inner_product(vacuum, vacuum) - 2 * sp.pi) == 0

    def test_levels_are_orthogonal(self):
        setup = MagneticSetup(1.0, 1)
        vacuum = PolynomialGaussian.constant(setup)
        raised = apply_creation(setup, 1, vacuum)
        assert gaussian_inner_product(vacuum, raised) == 0

    def test_axis_out_of_range(self):
        setup = MagneticSetup(1.0, 1)
        with pytest.raises(ValueError):
            apply_annihilation(setup, 2, PolynomialGaussian.constant(setup))

    def test_mismatched_setup(self):
        sample = PolynomialGaussian.constant(MagneticSetup(1.0, 1))
        with pytest.raises(ValueError):
            apply_creation(MagneticSetup(2.0, 1), 1, sample)

    def test_hamiltonian_matches_magnetic_laplacian(self):
        """sum Qbar Q + b d agrees with -(grad - i b A0)^2 applied by differences."""
        setup = MagneticSetup(1.0, 1)
        sample = PolynomialGaussian.from_coefficients(setup, {((2,), (1,)): 1.0, ((0,), (0,)): 0.5 - 1.0j})
        z = 0.3 + 0.2j
        exact = apply_hamiltonian(setup, sample).evaluate(np.array([z]))
        approximate = apply_hamiltonian_fd(setup, lambda w: sample.evaluate(np.asarray(w)[..., None]), z)
        assert abs(exact - approximate) < 1e-4

    def test_evaluate_vacuum(self):
        setup = MagneticSetup(2.0, 1)
        vacuum = PolynomialGaussian.constant(setup)
        z = np.array([[0.0], [1.0 + 1.0j]])
        np.testing.assert_allclose(vacuum.evaluate(z), [1.0, np.exp(-1.0)], rtol=1e-14)


def _random_sample(setup, rng, terms=3, degree=3):
    coefficients = {}
    for _ in range(terms):
        alpha = tuple(int(a) for a in rng.integers(0, degree, size=setup.d))
        beta = tuple(int(c) for c in rng.integers(0, degree, size=setup.d))
        coefficients[(alpha, beta)] = complex(*rng.integers(-3, 4, size=2))
    return PolynomialGaussian.from_coefficients(setup, coefficients)


def _covariant_laplacian(sample):
    """
    Polynomial part of -(grad - i b A0)^2 f in real coordinates z_j = x_j + i y_j.

    Each covariant derivative of p exp(-b|z|^2/4) is again a polynomial times
    the Gaussian, so the whole computation stays polynomial and exact.
    """
    b = sample.b
    z, zbar = complex_symbols(sample.d)
    xs = sp.symbols(f'x1:{sample.d + 1}', real=True)
    ys = sp.symbols(f'y1:{sample.d + 1}', real=True)
    to_real = {**{zj: x + sp.I * y for zj, x, y in zip(z, xs, ys)},
               **{wj: x - sp.I * y for wj, x, y in zip(zbar, xs, ys)}}
    p = sp.expand(sample.expr.subs(to_real, simultaneous=True))
    total = sp.Integer(0)
    for x, y in zip(xs, ys):
        along_x = lambda f: sp.diff(f, x) - b * x / 2 * f + sp.I * b * y / 2 * f
        along_y = lambda f: sp.diff(f, y) - b * y / 2 * f - sp.I * b * x / 2 * f
        total += along_x(along_x(p)) + along_y(along_y(p))
    return sp.expand(-total), to_real


class TestLadderIdentities:
    """Operator identities on random polynomial-Gaussian samples, d = 1 and 2."""

    @pytest.mark.parametrize("d", [1, 2])
    @pytest.mark.parametrize("seed", range(50))
    def test_commutator(self, d, seed):
        """[Q_j, Qbar_k] = 2 b delta_jk."""
        setup = MagneticSetup(1.5, d)
        sample = _random_sample(setup, np.random.default_rng(seed))
        for j in range(1, d + 1):
            for k in range(1, d + 1):
                expected = sample.scale(2 * sample.b) if j == k else sample.scale(0)
                assert commutator(setup, j, k, sample).equals(expected)

    @pytest.mark.parametrize("d", [1, 2])
    @pytest.mark.parametrize("seed", range(50))
    def test_creation_is_adjoint_of_annihilation(self, d, seed):
        """<Qbar_j f, g> = <f, Q_j g>."""
        rng = np.random.default_rng(1000 + seed)
        setup = MagneticSetup(2.0, d)
        f, g = _random_sample(setup, rng), _random_sample(setup, rng)
        for j in range(1, d + 1):
            left = gaussian_inner_product(apply_creation(setup, j, f), g)
            right = gaussian_inner_product(f, apply_annihilation(setup, j, g))
            assert sp.simplify(left - right) == 0

    @pytest.mark.parametrize("d", [1, 2])
    @pytest.mark.parametrize("seed", range(50))
    def test_hamiltonian_is_covariant_laplacian(self, d, seed):
        """sum Qbar_j Q_j + b d = -(grad - i b A0)^2."""
        setup = MagneticSetup(0.5, d)
        sample = _random_sample(setup, np.random.default_rng(2000 + seed))
        expected, to_real = _covariant_laplacian(sample)
        ladder = sp.expand(apply_hamiltonian(setup, sample).expr.subs(to_real, simultaneous=True))
        assert sp.expand(ladder - expected) == 0


class TestPhase:

    def test_wedge_is_antisymmetric(self):
        z, w = 0.3 + 0.7j, -1.1 + 0.4j
        assert wedge(z, w) == pytest.approx(-wedge(w, z))

    def test_phase_is_unimodular(self):
        value = magnetic_phase(0.3 + 0.7j, -1.1 + 0.4j, 2.0)
        assert abs(value) == pytest.approx(1.0)


class TestProjectionKernel:
    """K_q(z, w) of P_q in the plane."""

    @pytest.mark.parametrize("q", [1, 2, 3])
    @pytest.mark.parametrize("z", [0.0, 0.4 - 1.3j, 5.0 + 2.0j])
    def test_constant_diagonal(self, q, z):
        setup = MagneticSetup(1.7, 1)
        assert projection_kernel(setup, q, z, z) == pytest.approx(1.7 / (2 * np.pi), rel=1e-14)

    @pytest.mark.parametrize("q", [1, 2, 4])
    def test_hermitian_symmetry(self, q):
        setup = MagneticSetup(1.3, 1)
        z, w = 0.2 + 0.5j, -0.7 + 0.1j
        assert projection_kernel(setup, q, z, w) == pytest.approx(np.conj(projection_kernel(setup, q, w, z)),
                                                                   abs=1e-15)

    @pytest.mark.parametrize("q", [1, 2])
    def test_idempotence(self, q):
        setup = MagneticSetup(1.0, 1)
        z, w = 0.3, -0.2 + 0.4j
        composed = kernel_composition(setup, q, z, w)
        assert abs(composed - projection_kernel(setup, q, z, w)) < 1e-7

    @pytest.mark.parametrize("q", [1, 2, 3])
    def test_eigenfunction_of_hamiltonian(self, q):
        setup = MagneticSetup(1.0, 1)
        residual = eigen_residual(setup, q, 0.3 + 0.2j, -0.4 + 0.1j)
        assert abs(residual) < 1e-5

    def test_plane_only(self):
        with pytest.raises(ValueError):
            projection_kernel(MagneticSetup(1.0, 2), 1, 0.0, 0.0)
