# 3rd party
import numpy
import pytest

# this package
from stabrkc.enums import Boundary
from stabrkc.harness.examples import build_example
from stabrkc.problems import damped_wave_2d, wave_eigenvalues
from tests.common import assemble_matrix, nearest_distances


def _periodic_wave(N: int, B: float, A1: float, A2: float, D1: float, D2: float):
	return damped_wave_2d(N, B, A1, A2, D=D1, S=None, boundary=Boundary.PERIODIC, D2=D2)


def test_eigenvalues_match_operator():
	N, B, A1, A2, D1, D2 = 8, 0.3, 0.05, 1.5, 0.01, 0.02
	ode = _periodic_wave(N, B, A1, A2, D1, D2)
	matrix = assemble_matrix(ode.f, ode.dim)

	expected = wave_eigenvalues(N, B, A1, A2, D1, D2)
	actual = numpy.linalg.eigvals(matrix)

	assert expected.size == actual.size == 2 * N**2
	scale = numpy.abs(expected).max()
	assert nearest_distances(actual, expected).max() <= 1e-7 * scale
	assert nearest_distances(expected, actual).max() <= 1e-7 * scale


def test_radius_bounds():
	N = 8
	ode = _periodic_wave(N, 0.0, 0.05, 1.5, 0.01, 0.02)

	advection = assemble_matrix(ode.f_A, ode.dim)
	diffusion = assemble_matrix(ode.f_D, ode.dim)

	assert numpy.abs(numpy.linalg.eigvals(advection)).max() <= ode.rho_A(ode.y0) * (1 + 1e-8)
	assert numpy.abs(numpy.linalg.eigvals(diffusion)).max() <= ode.rho_D(ode.y0) * (1 + 1e-8)


def test_state_layout():
	ode = damped_wave_2d(6)
	assert ode.dim == 72
	assert not ode.y0.any()

	# Only the velocity is damped.
	state = numpy.random.default_rng(2).standard_normal(ode.dim)
	assert not ode.f_D(state)[:36].any()


def test_source_drives_velocity():
	ode = damped_wave_2d(10)
	rate = ode.f(ode.y0)

	assert not rate[:100].any()
	assert rate[100:].max() > 1


def test_example_radii():
	ode = build_example("ex1")
	assert ode.rho_A(ode.y0) == pytest.approx(775.9, abs=0.1)
	assert 7900 <= ode.rho_D(ode.y0) <= 8000
	assert ode.T == 0.75


def test_eigenvalue_grid_size():
	with pytest.raises(ValueError, match="at least 3"):
		wave_eigenvalues(2, 0, 1, 1, 0, 0)
