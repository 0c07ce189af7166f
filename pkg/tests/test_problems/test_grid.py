# 3rd party
import numpy
import pytest

# this package
from stabrkc.enums import Boundary
from stabrkc.problems.grid import Grid


class TestGrid:

	def test_layout(self):
		grid = Grid(2, 5)
		assert grid.boundary is Boundary.PERIODIC
		assert grid.shape == (5, 5)
		assert grid.size == 25
		assert grid.h_x == 0.2

	def test_boundary_from_string(self):
		assert Grid(1, 4, "zero-flux").boundary is Boundary.ZERO_FLUX

	def test_axis_points(self):
		numpy.testing.assert_allclose(Grid(1, 4).axis_points(), [0, 0.25, 0.5, 0.75])
		numpy.testing.assert_allclose(Grid(1, 4, Boundary.ZERO_FLUX).axis_points(), [0.125, 0.375, 0.625, 0.875])

	def test_coordinates_2d(self):
		x, y = Grid(2, 3).coordinates()
		assert x.shape == y.shape == (3, 3)
		numpy.testing.assert_allclose(x[:, 0], [0, 1 / 3, 2 / 3])
		numpy.testing.assert_allclose(y[0, :], [0, 1 / 3, 2 / 3])

	@pytest.mark.parametrize("dims", [0, 3])
	def test_bad_dims(self, dims: int):
		with pytest.raises(ValueError, match="Only 1 and 2 dimensional"):
			Grid(dims, 5)

	def test_too_few_points(self):
		with pytest.raises(ValueError, match="at least 3 points"):
			Grid(1, 2)


class TestStencils:

	field = numpy.array([1.0, 2.0, 4.0])

	def test_periodic_second_difference(self):
		numpy.testing.assert_allclose(Grid(1, 3).second_difference(self.field), [36, 9, -45])

	def test_zero_flux_second_difference(self):
		result = Grid(1, 3, Boundary.ZERO_FLUX).second_difference(self.field)
		numpy.testing.assert_allclose(result, [9, 9, -18])
		assert result.sum() == pytest.approx(0)

	def test_periodic_central_difference(self):
		numpy.testing.assert_allclose(Grid(1, 3).central_difference(self.field), [-3, 4.5, -1.5])

	def test_zero_flux_neighbours(self):
		left, right = Grid(1, 3, Boundary.ZERO_FLUX).neighbours(self.field)
		numpy.testing.assert_array_equal(left, [1, 1, 2])
		numpy.testing.assert_array_equal(right, [2, 4, 4])

	@pytest.mark.parametrize("boundary", [Boundary.PERIODIC, Boundary.ZERO_FLUX])
	def test_constant_field(self, boundary: Boundary):
		grid = Grid(2, 6, boundary)
		field = numpy.full(grid.shape, 3.0)
		assert not grid.laplacian(field).any()
		assert not grid.central_difference(field, 1).any()

	def test_laplacian_is_sum_of_axes(self):
		grid = Grid(2, 7)
		field = numpy.random.default_rng(5).standard_normal(grid.shape)
		expected = grid.second_difference(field, 0) + grid.second_difference(field, 1)
		numpy.testing.assert_array_equal(grid.laplacian(field), expected)

	def test_axis_direction(self):
		grid = Grid(2, 4)
		x, y = grid.coordinates()
		field = numpy.sin(2 * numpy.pi * x)

		assert not grid.central_difference(field, 1).any()
		assert grid.central_difference(field, 0).any()

	def test_second_order_accuracy(self):
		errors = []
		for N in (32, 64):
			grid = Grid(1, N)
			x = grid.coordinates()
			approx = grid.second_difference(numpy.sin(2 * numpy.pi * x))
			errors.append(numpy.abs(approx + 4 * numpy.pi**2 * numpy.sin(2 * numpy.pi * x)).max())

		assert errors[0] / errors[1] == pytest.approx(4, rel=0.05)
