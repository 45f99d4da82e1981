"""Test the polar grid, discrete fields, and the polar difference operators."""

import numpy as np
import pytest

from sdlab.discretization.field import DiscreteField
from sdlab.discretization.grid import build_disk_grid, build_radial_grid, integrate

import sdlab.discretization.operators as op
import sdlab.error as err


class TestPolarGrid(object):
    def test_invalid_resolution(self):
        """Test that grids below the minimal resolution or with an odd number
        of angular intervals are rejected.
        """
        build_disk_grid(4, 8)
        with pytest.raises(err.InvalidGridError):
            build_disk_grid(3, 8)
        with pytest.raises(err.InvalidGridError):
            build_disk_grid(4, 6)
        with pytest.raises(err.InvalidGridError):
            build_disk_grid(4, 9)
        with pytest.raises(err.InvalidGridError):
            build_disk_grid(4.0, 8)
        with pytest.raises(err.InvalidGridError):
            build_radial_grid(1)

    def test_node_layout(self):
        """Test node indices, radii and masks."""
        grid = build_disk_grid(4, 8)
        assert grid.node_count == 33
        assert grid.index(0, 5) == 0
        assert grid.index(1, 0) == 1
        assert grid.index(2, 3) == 1 + 8 + 3
        assert grid.index(2, 8) == grid.index(2, 0)
        assert grid.index(2, -1) == grid.index(2, 7)
        assert grid.r[grid.index(3, 2)] == 0.75
        assert np.all(grid.ring_nodes(4) == np.arange(25, 33))
        assert np.sum(grid.boundary) == 8
        assert np.sum(grid.interior) == 24
        assert not grid.interior[0]
        assert grid.shape() == (4, 8)
        radial = build_radial_grid(4)
        assert radial.h == 0.25
        assert radial.r[-1] == 1.0

    def test_quadrature(self):
        """The quadrature weights integrate the constant 1 to the area of the
        disk and r^2 to pi / 2 with second order accuracy.
        """
        for n in [16, 32, 64]:
            grid = build_disk_grid(n, 2 * n)
            area = integrate(grid, np.ones(grid.node_count))
            assert abs(area - np.pi) < 2.0 / n ** 2
            assert abs(integrate(grid, grid.r ** 2) - np.pi / 2) < 10.0 / n ** 2
        grid = build_disk_grid(4, 8)
        assert grid.quad_weights[0] == pytest.approx(np.pi / 64)
        w = grid.quad_weights
        assert w[grid.index(4, 0)] == pytest.approx(0.5 * w[grid.index(3, 0)] * 4 / 3)
        with pytest.raises(err.GridMismatchError):
            integrate(grid, np.ones(5))

    def test_quadrature_refinement(self):
        """The quadrature error of r^2 cos^2(theta) drops by at least a factor
        three per refinement.
        """
        errors = list()
        for n in [8, 16, 32, 64]:
            grid = build_disk_grid(n, 2 * n)
            value = integrate(grid, grid.r ** 2 * np.cos(grid.theta) ** 2)
            errors.append(abs(value - np.pi / 4))
        for e1, e2 in zip(errors[:-1], errors[1:]):
            assert e1 >= 3.0 * e2


class TestDiscreteField(object):
    def test_arithmetic(self):
        """Test arithmetic operations on fields."""
        grid = build_disk_grid(4, 8)
        u = DiscreteField.from_function(grid, lambda r, t: 1.0 - r ** 2)
        v = DiscreteField.zeros(grid)
        assert u.center_value == 1.0
        assert (u + v).sup_norm() == 1.0
        assert (u - u).sup_norm() == 0.0
        assert (2.0 * u).center_value == 2.0
        assert (u * 3).center_value == 3.0
        assert (-u).center_value == -1.0
        assert u.rings().shape == (4, 8)
        assert np.all(u.rings()[-1] == 0.0)
        with pytest.raises(err.GridMismatchError):
            DiscreteField(grid, np.zeros(10))
        with pytest.raises(err.GridMismatchError):
            u + DiscreteField.zeros(build_disk_grid(8, 16))


class TestPolarOperators(object):
    def test_gradient_of_quadratic(self):
        """The centered radial derivative is exact for quadratic functions of
        r at interior rings and at the boundary ring.
        """
        grid = build_disk_grid(8, 16)
        u = 1.0 - grid.r ** 2
        d = op.radial_derivative(grid, u)
        assert np.allclose(d[1:], -2.0 * grid.r[1:])
        assert d[0] == 0.0
        assert np.allclose(op.angular_derivative(grid, u), 0.0)
        g_x, g_y = op.center_gradient(grid, u)
        assert g_x == pytest.approx(0.0, abs=1e-12)
        assert g_y == pytest.approx(0.0, abs=1e-12)

    def test_center_gradient_of_linear(self):
        """The center gradient recovers the gradient of a linear function."""
        grid = build_disk_grid(8, 16)
        u = 2.0 * grid.x - 3.0 * grid.y
        g_x, g_y = op.center_gradient(grid, u)
        assert g_x == pytest.approx(2.0)
        assert g_y == pytest.approx(-3.0)
        mag = op.gradient_magnitude(grid, u)
        assert mag[0] == pytest.approx(np.sqrt(13.0))

    def test_divergence_free_fields(self):
        """Perpendicular gradients of radial stream functions have zero
        discrete divergence. The divergence of x is 2.
        """
        grid = build_disk_grid(8, 16)
        radial, angular = op.perpendicular_gradient(grid, np.log(grid.r + 1.0))
        div = op.divergence(grid, radial, angular)
        assert np.allclose(div, 0.0, atol=1e-12)
        div = op.divergence(grid, grid.r, np.zeros(grid.node_count))
        assert np.allclose(div[grid.interior], 2.0)
        assert div[0] == 0.0
        assert np.all(div[grid.boundary] == 0.0)
