"""
Tests for the green_kernel package: the profile integral I(s), its split and
small-s expansion, and the resolvent kernel G0 with its conormal derivative.
"""

import math
import time

import mpmath as mp
import numpy as np
import pytest

from green_kernel import (bessel_dI, bessel_I, coefficient_audit, eval_dI, eval_green_mehler, eval_I,
                          eval_I0, eval_I0_expansion, eval_I_direct, eval_Iinf, expansion_coeffs, green_g0,
                          green_plane, incomplete_gamma_tail, normal_derivative_g0, normal_derivative_plane,
                          printed_g_m, singular_expansion, split_I, split_point)
from landau import MagneticSetup


class TestProfileIntegral:
    """Quadrature of I(s) = int_1^inf exp(-s u)(u^2 - 1)^{(d-2)/2} du."""

    def test_elementary_case(self):
        assert float(eval_I(1, 2)) == pytest.approx(math.exp(-1), abs=1e-12)

    def test_agrees_with_t_domain_quadrature(self):
        assert abs(eval_I(0.1, 1) - eval_I_direct(0.1, 1)) < 1e-10

    @pytest.mark.parametrize("d", [1, 2, 3])
    @pytest.mark.parametrize("s", [0.05, 1.0, 5.0])
    def test_bessel_closed_form(self, d, s):
        assert float(bessel_I(s, d)) == pytest.approx(float(eval_I(s, d)), rel=1e-10)

    @pytest.mark.parametrize("d", [1, 3])
    def test_bessel_derivative(self, d):
        assert float(bessel_dI(0.7, d)) == pytest.approx(float(eval_dI(0.7, d)), rel=1e-10)

    @pytest.mark.parametrize("d", [1, 2, 3])
    @pytest.mark.parametrize("s", [1e-6, 1e-2, 1.0, 50.0])
    def test_split_identity(self, d, s):
        piece = split_I(s, d)
        assert abs(piece.total - eval_I(s, d)) <= 1e-10 * max(1.0, abs(eval_I(s, d)))

    @pytest.mark.parametrize("s", [5.0, 10.0, 20.0])
    def test_exponential_decay(self, s):
        assert eval_I(s, 1) <= mp.exp(-s)

    def test_logarithmic_singularity(self):
        """I0(s) + log s stays bounded as s -> 0 for d = 1."""
        values = [float(eval_I0(s, 1) + mp.log(s)) for s in (1e-2, 1e-4, 1e-6, 1e-8)]
        assert max(values) - min(values) < 0.1

    def test_parts_match_t_domain(self):
        assert abs(eval_I0(0.3, 2) - eval_I_direct(0.3, 2, part='I0')) < 1e-10
        assert abs(eval_Iinf(0.3, 2) - eval_I_direct(0.3, 2, part='Iinf')) < 1e-10

    def test_infinite_ranges_finish_promptly(self):
        start = time.perf_counter()
        assert float(eval_I(1.0, 2)) == pytest.approx(math.exp(-1), rel=1e-12)
        assert float(eval_I(2.0, 1)) == pytest.approx(float(bessel_I(2.0, 1)), rel=1e-10)
        assert float(eval_I(0.01, 1)) == pytest.approx(float(bessel_I(0.01, 1)), rel=1e-10)
        assert float(eval_dI(0.01, 3)) == pytest.approx(float(bessel_dI(0.01, 3)), rel=1e-8)
        assert time.perf_counter() - start < 10.0

    def test_split_point(self):
        assert float(split_point()) == pytest.approx(1 / math.tanh(1.0), rel=1e-15)

    @pytest.mark.parametrize("s", [0.0, -1.0])
    def test_non_positive_argument(self, s):
        with pytest.raises(ValueError):
            eval_I(s, 1)
        with pytest.raises(ValueError):
            bessel_I(s, 1)


class TestIncompleteGamma:

    @pytest.mark.parametrize("t", [0.1, 1.0, 3.5])
    def test_tail_of_order_two(self, t):
        expected = math.exp(-t) * (t * t + 2 * t + 2)
        assert float(incomplete_gamma_tail(2, t)) == pytest.approx(expected, rel=1e-14)
        assert float(printed_g_m(2, t, pochhammer='falling')) == pytest.approx(expected, rel=1e-14)

    def test_printed_reading_differs(self):
        assert abs(printed_g_m(2, 1.0) - incomplete_gamma_tail(2, 1.0)) > 0.1

    @pytest.mark.parametrize("t", [0.05, 0.5, 2.0])
    def test_negative_order(self, t):
        assert abs(printed_g_m(-1, t) - incomplete_gamma_tail(-1, t)) < 1e-15


class TestExpansionCoefficients:
    """Small-s expansion of I0 in the derived and printed conventions."""

    @pytest.mark.parametrize("d", [1, 2, 3])
    def test_index_ranges(self, d):
        coeffs = expansion_coeffs(d, 4)
        assert sorted(coeffs.c) == list(range(1 - d, 5))
        assert sorted(coeffs.c_prime) == list(range(0, 5))
        assert sorted(coeffs.d_coef) == list(range(0, 5))
        assert coeffs.is_finite()

    @pytest.mark.parametrize("d", [1, 2, 3, 4])
    def test_printed_constant_terms(self, d):
        coeffs = expansion_coeffs(d, 3, convention='printed')
        expected = mp.euler + mp.log(split_point()) + 1 if d % 2 == 1 else 0
        assert abs(coeffs.c_prime[0] - expected) < 1e-14
        assert coeffs.d_coef[0] == 0

    @pytest.mark.parametrize("d", [1, 2])
    def test_expansion_matches_quadrature(self, d):
        coeffs = expansion_coeffs(d, 6)
        assert abs(eval_I0_expansion(0.01, d, coeffs) - eval_I0(0.01, d)) <= 1e-8

    @pytest.mark.parametrize("d", [1, 2, 3])
    @pytest.mark.parametrize("s", [1e-2, 1e-3, 1e-4])
    def test_remainder_bound(self, d, s):
        """|expansion - I0| <= 10 s^7 |log s| at N = 6, with I0 confirmed by both quadratures."""
        reference = eval_I0(s, d, dps=60)
        assert abs(reference - eval_I_direct(s, d, part='I0', dps=60)) < 1e-12
        coeffs = expansion_coeffs(d, 6, dps=60)
        assert abs(eval_I0_expansion(s, d, coeffs) - reference) <= 10 * s ** 7 * abs(math.log(s))

    @pytest.mark.parametrize("d", [1, 3])
    @pytest.mark.parametrize("N", [4, 6])
    def test_remainder_order(self, d, N):
        """The remainder falls like s^{N+1}."""
        samples = np.array([1e-2, 1e-3, 1e-4])
        coeffs = expansion_coeffs(d, N, dps=60)
        residuals = [abs(eval_I0_expansion(s, d, coeffs) - eval_I0(s, d, dps=60)) for s in samples]
        slope = np.polyfit(np.log(samples), [float(mp.log(r)) for r in residuals], 1)[0]
        assert slope == pytest.approx(N + 1, abs=0.15)

    def test_expansion_error_shrinks_with_order(self):
        low = abs(eval_I0_expansion(0.05, 1, expansion_coeffs(1, 2)) - eval_I0(0.05, 1))
        high = abs(eval_I0_expansion(0.05, 1, expansion_coeffs(1, 6)) - eval_I0(0.05, 1))
        assert high < low

    def test_frame_layout(self):
        frame = expansion_coeffs(2, 3).to_frame()
        assert list(frame.columns) == ['kind', 'j', 'value']
        assert set(frame['kind']) == {'c', 'c_prime', 'd'}
        assert len(frame) == 5 + 4 + 4

    def test_audit_reports_residuals(self):
        frame = coefficient_audit(1, 3, samples=(1e-2, 1e-3))
        residuals = frame[frame['kind'] == 'residual']
        assert len(residuals) == 2
        assert all(abs(float(value)) < 1e-5 for value in residuals['derived'])

    def test_expansion_range(self):
        coeffs = expansion_coeffs(1, 2)
        with pytest.raises(ValueError):
            eval_I0_expansion(1.5, 1, coeffs)
        with pytest.raises(ValueError):
            eval_I0_expansion(0.1, 2, coeffs)

    @pytest.mark.parametrize("d, N, convention", [(0, 2, 'derived'), (1, 0, 'derived'), (1, 2, 'other')])
    def test_invalid_arguments(self, d, N, convention):
        with pytest.raises(ValueError):
            expansion_coeffs(d, N, convention)


class TestResolventKernel:
    """G0 = b^{d-1}/(4 pi)^d exp(-i b (z ^ zeta)/2) I(b|z - zeta|^2/4)."""

    def test_matches_mehler_form(self):
        setup = MagneticSetup(1.0, 1)
        z, zeta = 0.3 + 0.1j, -0.2 + 0.5j
        assert abs(green_g0(setup, z, zeta) - eval_green_mehler(setup, z, zeta)) < 1e-8

    def test_matches_vectorized_plane_kernel(self):
        setup = MagneticSetup(2.0, 1)
        z, zeta = 0.3 + 0.1j, -0.2 + 0.5j
        assert abs(green_g0(setup, z, zeta) - complex(green_plane(2.0, z, zeta))) < 1e-12

    @pytest.mark.parametrize("d", [1, 2])
    def test_hermitian(self, d):
        setup = MagneticSetup(1.5, d)
        z = np.array([0.3 + 0.1j, -0.4j][:d])
        zeta = np.array([-0.2 + 0.5j, 0.1][:d])
        assert abs(green_g0(setup, z, zeta) - np.conj(green_g0(setup, zeta, z))) < 1e-14

    def test_logarithmic_leading_term(self):
        setup = MagneticSetup(1.0, 1)
        values = [green_g0(setup, 0.0, r).real - math.log(1 / r) / (2 * math.pi)
                  for r in (1e-1, 1e-2, 1e-3, 1e-4)]
        assert max(values) - min(values) < 1e-2

    def test_four_dimensional_leading_term(self):
        """For d = 2, I(s) = exp(-s)/s and G0 = exp(-s)/(4 pi^2 r^2) on the real axis."""
        setup = MagneticSetup(1.0, 2)
        r = 0.05
        value = green_g0(setup, np.array([0.0, 0.0]), np.array([r, 0.0]))
        expected = math.exp(-r * r / 4) / (4 * math.pi ** 2 * r * r)
        assert value.real == pytest.approx(expected, rel=1e-10)

    def test_gaussian_decay(self):
        setup = MagneticSetup(1.0, 1)
        far = abs(green_g0(setup, 0.0, 10.0))
        assert far <= math.exp(-10)
        # exp(-b r^2/4): the ratio between r = 10 and r = 5 is about exp(-18.75)
        assert far < abs(green_g0(setup, 0.0, 5.0)) * math.exp(-18)

    def test_diagonal_is_singular(self):
        with pytest.raises(ValueError):
            green_g0(MagneticSetup(1.0, 1), 0.5, 0.5)

    def test_conormal_derivative_matches_vectorized(self):
        setup = MagneticSetup(1.3, 1)
        x, nu, y = 0.4 + 0.2j, np.exp(0.7j), -0.3 + 0.6j
        exact = normal_derivative_g0(setup, x, nu, y)
        assert abs(exact - complex(normal_derivative_plane(1.3, x, nu, y))) < 1e-10

    def test_tangential_direction_has_no_radial_part(self):
        """For nu perpendicular to x - y only the gauge term i b g nu.A0(y - x) remains."""
        setup = MagneticSetup(1.3, 1)
        x, y = 0.4 + 0.2j, -0.3 + 0.6j
        nu = 1j * (x - y) / abs(x - y)
        gauge = np.real(np.conj(nu) * 0.5j * (y - x))
        expected = 1j * setup.b * gauge * green_g0(setup, x, y)
        assert abs(normal_derivative_g0(setup, x, nu, y) - expected) < 1e-12

    def test_conormal_derivative_by_differences(self):
        b, h = 1.3, 1e-5
        x, nu, y = 0.4 + 0.2j, np.exp(0.7j), -0.3 + 0.6j
        directional = (green_plane(b, x + h * nu, y) - green_plane(b, x - h * nu, y)) / (2 * h)
        gauge = np.real(np.conj(nu) * 0.5j * x)
        expected = directional - 1j * b * gauge * green_plane(b, x, y)
        assert abs(complex(normal_derivative_plane(b, x, nu, y)) - expected) < 1e-7


class TestSingularExpansion:

    def test_leading_coefficients(self):
        plane = singular_expansion(MagneticSetup(1.0, 1), 2)
        assert plane.leading_coefficient == pytest.approx(1 / (2 * math.pi))
        space = singular_expansion(MagneticSetup(1.0, 2), 3)
        assert space.leading_coefficient == pytest.approx(1 / (4 * math.pi ** 2))
        assert space.printed_leading_coefficient == pytest.approx(1 / (2 * math.pi ** 2))

    def test_remainder_is_small_near_diagonal(self):
        expansion = singular_expansion(MagneticSetup(1.0, 1), 2)
        assert abs(expansion.radial_residual(0.1)) < 1e-4
        assert abs(expansion.radial_residual(0.01)) < 1e-7

    @pytest.mark.parametrize("d, N", [(1, 2), (2, 3)])
    def test_remainder_slope(self, d, N):
        expansion = singular_expansion(MagneticSetup(1.0, d), N)
        radii = np.array([0.1, 0.05, 0.025])
        residuals = np.array([abs(float(expansion.radial_residual(r))) for r in radii])
        if expansion.remainder_has_log:
            residuals /= np.abs(np.log(radii ** 2 / 4))
        slope = np.polyfit(np.log(radii), np.log(residuals), 1)[0]
        assert slope == pytest.approx(expansion.remainder_order, abs=0.15)

    def test_evaluate_matches_kernel(self):
        setup = MagneticSetup(1.0, 1)
        expansion = singular_expansion(setup, 4)
        z, zeta = 0.3, 0.3 + 0.02j
        assert abs(expansion.evaluate(z, zeta) - green_g0(setup, z, zeta)) < 1e-8

    def test_order_below_dimension(self):
        with pytest.raises(ValueError):
            singular_expansion(MagneticSetup(1.0, 3), 2)
