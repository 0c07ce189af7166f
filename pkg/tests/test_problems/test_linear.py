# 3rd party
import numpy
import pytest

# this package
from stabrkc.problems import linear_split, make_problem
from stabrkc.problems.linear import DEFAULT_A_MATRIX, DEFAULT_D_MATRIX


def test_defaults():
	ode = make_problem("linear")
	assert ode.dim == 2
	assert ode.T == 1.0
	numpy.testing.assert_array_equal(ode.y0, numpy.ones(2))
	numpy.testing.assert_allclose(ode.f(ode.y0), (DEFAULT_D_MATRIX + DEFAULT_A_MATRIX) @ numpy.ones(2))


def test_exact_solution():
	ode = linear_split(T=2.0)
	numpy.testing.assert_allclose(ode.exact(0.0), ode.y0, atol=1e-14)

	t, delta = 0.7, 1e-5
	derivative = (ode.exact(t + delta) - ode.exact(t - delta)) / (2 * delta)
	numpy.testing.assert_allclose(derivative, ode.f(ode.exact(t)), rtol=1e-8, atol=1e-10)


def test_radii():
	ode = linear_split(numpy.diag([-3.0, -1.0]), [[0.0, 2.0], [-2.0, 0.0]])
	assert ode.rho_D(ode.y0) == pytest.approx(3.0)
	assert ode.rho_A(ode.y0) == pytest.approx(2.0)


def test_custom_initial_state():
	ode = linear_split(y0=[2.0, -1.0])
	numpy.testing.assert_allclose(ode.exact(0.0), [2.0, -1.0], atol=1e-14)


def test_shape_mismatch():
	with pytest.raises(ValueError, match="two square matrices"):
		linear_split(numpy.eye(2), numpy.eye(3))

	with pytest.raises(ValueError, match="two square matrices"):
		linear_split(numpy.ones((2, 3)), numpy.ones((2, 3)))
