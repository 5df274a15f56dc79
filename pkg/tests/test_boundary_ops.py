"""
Tests for the boundary_ops package: log-singular quadrature, the Nystrom
matrices of A and B, layer potentials with their jump relations, the
Dirichlet-to-Robin maps and the Green representation.
"""

import numpy as np
import pytest

from boundary_ops import (BoundaryOperatorMatrix, RobinCoefficient, assemble_A, assemble_B, double_layer_potential,
                          dtr_maps, dtr_residuals, extrapolate_to_zero, generic_sweep, jump_test, log_weights,
                          mode_norms, representation_check, scaled_min_singular_value, self_convergence,
                          single_layer_potential, singular_value_slope)
from capacity import circle, ellipse, perturbed_circle
from core.errors import ExtrapolationError
from green_kernel import green_plane, normal_derivative_plane


class TestLogQuadrature:

    @pytest.mark.parametrize("k", [1, 3, 7])
    def test_fourier_modes_are_integrated_exactly(self, k):
        """int log(4 sin^2((t-s)/2)) e^{iks} ds = -(2 pi/|k|) e^{ikt}."""
        n = 32
        t = 2 * np.pi * np.arange(n) / n
        np.testing.assert_allclose(log_weights(n) @ np.exp(1j * k * t), -2 * np.pi / k * np.exp(1j * k * t),
                                   atol=1e-12)

    def test_constant_has_zero_integral(self):
        np.testing.assert_allclose(log_weights(16) @ np.ones(16), 0.0, atol=1e-12)

    def test_odd_node_count(self):
        with pytest.raises(ValueError):
            log_weights(15)


class TestLayerOperators:

    def test_single_layer_is_hermitian(self):
        A = assemble_A(perturbed_circle(n=128), 1.0)
        assert A.hermitian_defect() < 1e-10

    def test_single_layer_modes_on_unit_circle(self):
        """Leading behaviour 1/(2|k|) of the logarithmic kernel on the unit circle."""
        A = assemble_A(circle(1.0, n=256), 1.0)
        modes = np.array([16, 32, -32])
        np.testing.assert_allclose(np.abs(modes) * mode_norms(A, modes), 0.5, rtol=0.1)

    def test_single_layer_has_order_minus_one(self):
        A = assemble_A(circle(1.0, n=256), 1.0)
        assert singular_value_slope(A) == pytest.approx(-1.0, abs=0.15)
        assert scaled_min_singular_value(A) > 0

    def test_scaled_singular_values_under_refinement(self):
        curve = perturbed_circle(n=128)
        coarse = scaled_min_singular_value(assemble_A(curve, 1.0), k_max=32)
        fine = scaled_min_singular_value(assemble_A(curve, 1.0, n=256), k_max=32)
        assert 0.8 <= coarse / fine <= 1.25

    def test_resampling_on_assembly(self):
        B = assemble_B(ellipse(n=64), 0.5, n=128)
        assert B.n == 128
        assert B.matrix.shape == (128, 128)

    @pytest.mark.parametrize("kind", ['A', 'B'])
    def test_self_convergence(self, kind):
        error = self_convergence(perturbed_circle(n=64), 1.0, kind, lambda t: np.exp(2j * t), 64)
        assert error < 1e-6

    def test_self_convergence_kind(self):
        with pytest.raises(ValueError):
            self_convergence(circle(n=16), 1.0, 'T_plus', np.cos, 16)

    @pytest.mark.parametrize("b, n", [(0.0, None), (1.0, 33)])
    def test_invalid_assembly(self, b, n):
        with pytest.raises(ValueError):
            assemble_A(circle(n=32), b, n)

    def test_matrix_frame(self):
        A = assemble_A(circle(n=8), 1.0)
        frame = A.to_frame()
        assert list(frame.columns) == ['row', 'col', 're', 'im']
        assert len(frame) == 64
        assert frame['re'].iloc[9] == A.matrix[1, 1].real

    def test_unknown_kind(self):
        curve = circle(n=8)
        with pytest.raises(ValueError):
            BoundaryOperatorMatrix('C', np.eye(8, dtype=complex), curve, 1.0)
        with pytest.raises(ValueError):
            BoundaryOperatorMatrix('A', np.eye(4, dtype=complex), curve, 1.0)


class TestRobinCoefficient:

    def test_constant_and_shift(self):
        tau = RobinCoefficient.constant(2.0, 4).shifted(-0.5)
        np.testing.assert_array_equal(tau.values, 1.5)
        assert tau.n == 4

    def test_from_function(self):
        curve = circle(n=16)
        tau = RobinCoefficient.from_function(curve, np.cos)
        np.testing.assert_allclose(tau.values, np.cos(curve.t))

    def test_real_valued(self):
        with pytest.raises(ValueError):
            RobinCoefficient(np.array([1.0, 1.0j]))
        with pytest.raises(ValueError):
            RobinCoefficient(np.ones((2, 2)))


class TestLayerPotentials:

    def test_zero_density(self):
        curve = ellipse(n=64)
        values = single_layer_potential(curve, 1.0, np.zeros(64), np.array([3.0, 0.3j]))
        np.testing.assert_array_equal(values, 0.0)

    def test_scalar_target(self):
        curve = circle(n=64)
        value = double_layer_potential(curve, 1.0, np.ones(64), 0.2)
        assert isinstance(value, complex)

    def test_target_on_node(self):
        curve = circle(n=64)
        with pytest.raises(ValueError):
            single_layer_potential(curve, 1.0, np.ones(64), curve.points[3])

    def test_density_shape(self):
        with pytest.raises(ValueError):
            single_layer_potential(circle(n=64), 1.0, np.ones(32), 3.0)


class TestJumpRelations:
    """One-sided limits by extrapolation along the normal."""

    def test_extrapolation_of_polynomial(self):
        h = np.array([0.1, 0.2, 0.3, 0.4])
        assert extrapolate_to_zero(h, 1 + 2 * h + 3 * h ** 2) == pytest.approx(1.0, abs=1e-12)

    def test_unsettled_extrapolation(self):
        h = np.array([0.1, 0.2, 0.3])
        with pytest.raises(ExtrapolationError):
            extrapolate_to_zero(h, 1 / h)

    def test_extrapolation_needs_three_points(self):
        with pytest.raises(ValueError):
            extrapolate_to_zero([0.1, 0.2], [1.0, 2.0])

    def test_unit_circle(self):
        report = jump_test(circle(1.0, n=256), 1.0, lambda t: np.exp(2j * t), 0)
        assert report.max_deviation() < 1e-6
        assert report.density_value == pytest.approx(1.0)

    @pytest.mark.parametrize("index", [0, 37])
    def test_perturbed_circle(self, index):
        report = jump_test(perturbed_circle(n=256), 2.0, lambda t: 1 + 0.5 * np.cos(t), index)
        assert report.max_deviation() < 1e-6

    @pytest.mark.parametrize("seed", [0, 1])
    def test_random_trigonometric_density(self, seed):
        rng = np.random.default_rng(seed)
        modes = np.arange(-4, 5)
        weights = (rng.standard_normal(modes.size) + 1j * rng.standard_normal(modes.size)) / (1 + modes ** 2)
        density = lambda t: np.exp(1j * np.outer(t, modes)) @ weights
        report = jump_test(perturbed_circle(n=256), 1.0, density, 11)
        assert report.max_deviation() < 1e-6

    def test_report_dictionary(self):
        report = jump_test(circle(1.0, n=128), 1.0, np.ones(128), 5)
        data = report.to_dict()
        assert set(data['deviations']) == {'single_layer_continuity', 'single_layer_trace', 'double_layer_jump',
                                           'double_layer_interior', 'double_layer_exterior',
                                           'normal_derivative_jump'}
        assert data['index'] == 5
        assert len(data['A_node']) == 2

    def test_node_out_of_range(self):
        with pytest.raises(ValueError):
            jump_test(circle(n=16), 1.0, np.ones(16), 16)


@pytest.fixture(scope="module")
def ellipse_maps():
    curve = ellipse(2.0, 1.0, n=128)
    return dtr_maps(curve, 1.0, RobinCoefficient.constant(0.5, curve.n))


class TestRobinMaps:

    def test_residuals(self, ellipse_maps):
        residuals = dtr_residuals(ellipse_maps)
        assert set(residuals) == {'interior', 'exterior'}
        assert max(residuals.values()) < 1e-10

    def test_difference_of_maps_inverts_single_layer(self, ellipse_maps):
        """DtR_exterior - DtR_interior = A^{-1}."""
        difference = ellipse_maps['DtR_exterior'].matrix - ellipse_maps['DtR_interior'].matrix
        np.testing.assert_allclose(ellipse_maps['A'].matrix @ difference, np.eye(128), atol=1e-8)

    def test_kinds(self, ellipse_maps):
        assert {key: value.kind for key, value in ellipse_maps.items()} == {key: key for key in ellipse_maps}

    def test_coefficient_size(self):
        with pytest.raises(ValueError):
            dtr_maps(circle(n=32), 1.0, RobinCoefficient.constant(0.0, 16))

    @pytest.mark.parametrize("side, source", [('interior', 3.0 + 1.0j), ('exterior', 0.3 - 0.2j)])
    def test_manufactured_solution(self, side, source):
        """DtR maps the Dirichlet trace of G0(., y0) to its Robin data."""
        tau = 0.5
        maps = dtr_maps(ellipse(2.0, 1.0, n=256), 1.0, RobinCoefficient.constant(tau, 512), n=512)
        curve = maps['A'].curve
        trace = green_plane(1.0, curve.points, source)
        robin = normal_derivative_plane(1.0, curve.points, curve.omega_normal, source) + tau * trace
        assert np.max(np.abs(maps[f'DtR_{side}'].apply(trace) - robin)) <= 1e-6

    def test_generic_sweep(self):
        curve = circle(1.0, n=64)
        sweep = generic_sweep(curve, 1.0, epsilons=[-0.5, 0.0, 0.5])
        assert list(sweep.frame.columns) == ['epsilon', 'cond_plus', 'cond_minus', 'singular']
        assert len(sweep.frame) == 3
        assert sweep.singular_count == int(sweep.frame['singular'].sum())

    @pytest.mark.slow
    def test_generic_sweep_under_refinement(self):
        curve = ellipse(2.0, 1.0, n=128)
        coarse = generic_sweep(curve, 1.0, RobinCoefficient.constant(0.25, 128))
        fine = generic_sweep(curve, 1.0, RobinCoefficient.constant(0.25, 256), n=256)
        assert len(coarse.frame) == 101
        assert coarse.singular_count <= 5
        assert coarse.singular_count == fine.singular_count


class TestRepresentation:

    def test_exterior(self):
        report = representation_check(circle(1.0, n=64), 1.0, 0.1 + 0.1j, 'exterior', n=512)
        assert report.n == 512
        assert report.points > 0
        assert report.max_residual <= 1e-8

    def test_interior(self):
        report = representation_check(ellipse(2.0, 1.0, n=256), 1.0, 3.0 + 1.0j, 'interior', n=512)
        assert report.max_residual <= 1e-8

    def test_source_on_wrong_side(self):
        with pytest.raises(ValueError):
            representation_check(circle(1.0, n=64), 1.0, 0.0, 'interior')

    def test_unknown_side(self):
        with pytest.raises(ValueError):
            representation_check(circle(1.0, n=64), 1.0, 0.0, 'inside')
