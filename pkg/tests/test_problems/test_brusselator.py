# 3rd party
import numpy
import pytest

# this package
from stabrkc.problems import brusselator_2d
from stabrkc.problems.brusselator import reaction
from stabrkc.problems.radius import PowerIterationRadius


def test_reaction_equilibrium():
	react_w, react_w_hat = reaction(numpy.array([1.3]), numpy.array([1 / 1.3]))
	assert react_w[0] == pytest.approx(0, abs=1e-14)
	assert react_w_hat[0] == pytest.approx(0, abs=1e-14)


def test_reaction_values():
	react_w, react_w_hat = reaction(2.0, 3.0)
	assert (react_w, react_w_hat) == pytest.approx((12 - 4 + 1.3, 2 - 12))


def test_uniform_equilibrium_is_steady():
	N = 6
	ode = brusselator_2d(N, A=2.0, D=0.04)
	state = numpy.concatenate([numpy.full(N * N, 1.3), numpy.full(N * N, 1 / 1.3)])

	assert numpy.abs(ode.f_D(state)).max() == pytest.approx(0, abs=1e-10)
	assert numpy.abs(ode.f_A(state)).max() == pytest.approx(0, abs=1e-12)


def test_initial_state():
	N = 10
	ode = brusselator_2d(N, A=0.02, D=0.04)
	w0 = ode.y0[:N * N].reshape(N, N)
	w_hat0 = ode.y0[N * N:].reshape(N, N)

	assert ode.dim == 2 * N * N
	# w depends on y only and w_hat on x only
	numpy.testing.assert_allclose(w0, w0[:1, :].repeat(N, axis=0))
	numpy.testing.assert_allclose(w_hat0, w0.T)
	assert w0.max() == pytest.approx(22 * 0.4 * 0.6**1.5, rel=0.05)


def test_radii():
	ode = brusselator_2d(20, A=2.0, D=0.04)
	assert ode.rho_D(ode.y0) == pytest.approx(128)
	assert isinstance(ode.rho_A, PowerIterationRadius)
	assert ode.rho_A_refresh == 25
	assert ode.rho_A(ode.y0) > 0


def test_analytic_radius():
	N, A = 12, 2.0
	ode = brusselator_2d(N, A=A, D=0.04, analytic_radius=True)
	assert ode.rho_A_refresh == 1
	assert ode.rho_A(ode.y0) >= 1.5 * A * N


def test_diffusion_conserves_mass():
	ode = brusselator_2d(8, A=0.02, D=0.04)
	state = numpy.random.default_rng(3).uniform(0, 2, ode.dim)
	assert ode.f_D(state).sum() == pytest.approx(0, abs=1e-9)
