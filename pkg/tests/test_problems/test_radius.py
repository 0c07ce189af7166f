# 3rd party
import numpy
import pytest

# this package
from stabrkc.harness.examples import build_example
from stabrkc.problems import power_iteration_radius
from stabrkc.problems.radius import SAFETY_FACTOR, PowerIterationRadius


def test_symmetric_matrix():
	matrix = numpy.diag([-1.0, -2.0, -3.0, -4.0, -5.0])
	estimate = power_iteration_radius(lambda y: matrix @ y, numpy.zeros(5), iters=40, safety=1.0)
	assert estimate == pytest.approx(5.0, rel=1e-3)


def test_rotation():
	matrix = numpy.array([[0.0, -3.0], [3.0, 0.0]])
	estimate = power_iteration_radius(lambda y: matrix @ y, numpy.ones(2), safety=1.0)
	assert estimate == pytest.approx(3.0, rel=1e-6)


def test_safety_factor():
	matrix = numpy.diag([2.0, 1.0])
	plain = power_iteration_radius(lambda y: matrix @ y, numpy.ones(2), safety=1.0)
	assert power_iteration_radius(lambda y: matrix @ y, numpy.ones(2)) == pytest.approx(SAFETY_FACTOR * plain)


def test_constant_field():
	assert power_iteration_radius(lambda y: numpy.ones_like(y), numpy.ones(3)) == 0.0


def test_reproducible():
	matrix = numpy.random.default_rng(0).standard_normal((6, 6))
	first = power_iteration_radius(lambda y: matrix @ y, numpy.ones(6), seed=4)
	assert power_iteration_radius(lambda y: matrix @ y, numpy.ones(6), seed=4) == first


def test_too_few_iterations():
	with pytest.raises(ValueError, match="At least 5 iterations"):
		power_iteration_radius(lambda y: y, numpy.ones(2), iters=4)


def test_provider():
	matrix = numpy.diag([-1.0, -7.0])
	provider = PowerIterationRadius(lambda y: matrix @ y, iters=40)
	assert provider.last is None

	value = provider(numpy.zeros(2))
	assert provider.last == value
	assert value == pytest.approx(7 * SAFETY_FACTOR, rel=1e-3)


def test_seed_is_set_by_example():
	ode = build_example("ex4", N=20, seed=9)
	assert isinstance(ode.rho_A, PowerIterationRadius)
	assert ode.rho_A.seed == 9
