# 3rd party
import numpy
import pytest

# this package
from stabrkc.adaptive import (
		AdaptiveConfig,
		StepRecord,
		audit_counters,
		combine_err,
		embedded_tilde_Ks,
		est_err_A,
		est_err_D,
		integrate_adaptive,
		integrate_fixed,
		new_h,
		select_s_m,
		select_stages,
		step_cost
		)
from stabrkc.chebyshev import arkc_eta, rkc_coeffs
from stabrkc.enums import Estimator
from stabrkc.errors import IntegrationError, NonFiniteStateError, StepSizeUnderflowError
from stabrkc.harness.examples import build_example
from stabrkc.methods import nprkc_step
from stabrkc.ode import SplitOde, StepStats
from stabrkc.problems import make_problem
from stabrkc.stability import real_axis_extent, stage_poly
from stabrkc.utils import fit_slope, max_norm, rms_norm

ADAPTIVE_METHODS = ["nprkc", "rkc", "prkc", "arkc"]


class TestEstimators:

	def test_err_D(self):
		k0 = numpy.array([1.0, 2.0])
		k_s = numpy.array([0.5, 1.0])
		f0 = numpy.array([-1.0, 0.0])
		f_s = numpy.array([-0.5, 3.0])

		expected = (12 * (k0 - k_s) + 6 * 0.1 * (f0 + f_s)) / 15
		numpy.testing.assert_allclose(est_err_D(k0, k_s, f0, f_s, 0.1), expected)

	def test_err_D_vanishes_on_constant_state(self):
		y = numpy.ones(3)
		zero = numpy.zeros(3)
		assert not est_err_D(y, y, zero, zero, 0.5).any()

	@pytest.mark.parametrize("s", [2, 5, 10, 24])
	def test_embedded_first_order(self, s: int):
		coeffs = rkc_coeffs(s)
		z = 1e-4
		k_s1 = numpy.array([stage_poly(coeffs.s1, z, coeffs)])
		embedded = embedded_tilde_Ks(numpy.array([1.0]), k_s1, s, coeffs)
		assert abs(embedded[0] - (1 + z)) <= 1e-6

	def test_embedded_errors(self):
		coeffs = rkc_coeffs(5)
		with pytest.raises(ValueError, match="at least 2 stages"):
			embedded_tilde_Ks(numpy.ones(1), numpy.ones(1), 1, coeffs)
		with pytest.raises(ValueError, match="Coefficients are for 5 stages"):
			embedded_tilde_Ks(numpy.ones(1), numpy.ones(1), 6, coeffs)

	def test_err_A(self):
		y_next = numpy.array([2.0])
		k_s = numpy.array([1.0])
		pairs = [(numpy.array([0.4]), numpy.array([0.2])), (numpy.array([-0.2]), numpy.array([0.6]))]

		k_star = 1.0 - 0.05 * 0.4 + 0.075 * 0.2 + 0.05 * 0.2 + 0.075 * 0.6
		assert est_err_A(y_next, k_s, pairs, 0.1, 2)[0] == pytest.approx(2.0 - k_star)

	def test_err_A_is_third_order(self):
		z = 0.01j
		ode = SplitOde(f_A=lambda y: z * y, y0=numpy.array([1.0 + 0j]))
		out = nprkc_step(ode, ode.y0, 1.0, rkc_coeffs(3), 1)
		err_A = est_err_A(out.y_next, out.stages.k_s, out.stages.f_a_pairs, 1.0, 1)
		assert abs(err_A[0]) == pytest.approx(abs(z)**3 / 24, rel=0.05)

	def test_err_A_pairs_mismatch(self):
		with pytest.raises(ValueError, match="Expected 2 pairs"):
			est_err_A(numpy.ones(1), numpy.ones(1), [(numpy.ones(1), numpy.ones(1))], 0.1, 2)


class TestCombineErr:

	def test_variant_1(self):
		err = combine_err(1, err_D=numpy.array([3.0, -4.0]), err_A=numpy.ones(2))
		assert err == pytest.approx(numpy.sqrt(12.5))

	def test_variant_2(self):
		err = combine_err(Estimator.VARIANT_2, err_tilde_D=numpy.array([1e-3]), err_A=numpy.array([1e-3]))
		assert err == pytest.approx(1e-2)

	def test_custom_norm(self):
		err = combine_err(1, err_D=numpy.array([3.0, -4.0]), err_A=numpy.ones(2), norm=max_norm)
		assert err == 4.0

	@pytest.mark.parametrize(
			"variant, kwargs",
			[
					(1, {"err_A": numpy.ones(1)}),
					(1, {"err_tilde_D": numpy.ones(1), "err_A": numpy.ones(1)}),
					(2, {"err_D": numpy.ones(1), "err_A": numpy.ones(1)}),
					(2, {"err_tilde_D": numpy.ones(1)}),
					],
			)
	def test_missing_estimate(self, variant, kwargs):
		with pytest.raises(ValueError, match="needs both"):
			combine_err(variant, **kwargs)


class TestNewH:

	def test_zero_error_grows(self):
		assert new_h(0.1, 0.0, 1e-3) == pytest.approx(0.2)

	def test_at_tolerance(self):
		assert new_h(0.1, 1e-3, 1e-3) == pytest.approx(0.08)

	def test_huge_error_shrinks(self):
		assert new_h(0.1, 1e10, 1e-3) == pytest.approx(0.01)

	def test_variant_exponents(self):
		assert new_h(0.1, 8e-3, 1e-3, Estimator.VARIANT_1) == pytest.approx(0.04)
		assert new_h(0.1, 4e-3, 1e-3, Estimator.VARIANT_2) == pytest.approx(0.04)
		assert new_h(0.1, 8e-3, 1e-3, Estimator.VARIANT_2, order=3) == pytest.approx(0.04)

	def test_bounds(self):
		assert new_h(0.1, 0.0, 1e-3, h_max=0.15) == 0.15
		assert new_h(0.1, 1e10, 1e-3, h_min=0.05) == 0.05

	def test_custom_caps(self):
		assert new_h(0.1, 0.0, 1e-3, growth_cap=5.0) == pytest.approx(0.5)
		assert new_h(0.1, 1e10, 1e-3, shrink_floor=0.5) == pytest.approx(0.05)


class TestStageSelection:

	def test_select_s_m(self):
		assert select_s_m(1 / 30, 8000, 775.9) == (21, 13)

	def test_minimums(self):
		assert select_s_m(0.1, 0.0, 0.0) == (2, 1)

	def test_negative_radius(self):
		with pytest.raises(ValueError, match="non-negative"):
			select_s_m(0.1, -1.0, 0.0)

	def test_rkc_covers_both_parts(self):
		assert select_stages("rkc", 1 / 30, 8000, 775.9) == (select_s_m(1 / 30, 8775.9, 0)[0], 0)

	def test_prkc(self):
		assert select_stages("prkc", 1 / 30, 8000, 775.9) == (21, 0)

	def test_rk4m(self):
		assert select_stages("rk4m", 1 / 30, 8000, 775.9) == (0, 13)

	@pytest.mark.parametrize("method", ["rk3", "prk3", "midpoint"])
	def test_without_stages(self, method: str):
		assert select_stages(method, 1 / 30, 8000, 775.9) == (0, 0)

	def test_arkc(self):
		s, m = select_stages("arkc", 0.01, 10000, 0)
		assert m == 0
		assert s > 2
		assert real_axis_extent(s, arkc_eta(s)) >= 100


@pytest.mark.parametrize(
		"method, estimator, s, m, expects",
		[
				("nprkc", 1, 5, 2, (6, 8)),
				("nprkc", 2, 5, 2, (5, 8)),
				("nprkc", None, 5, 2, (5, 8)),
				("rkc", 2, 5, 0, (6, 6)),
				("prkc", 2, 5, 0, (7, 5)),
				("arkc", 2, 5, 0, (8, 4)),
				("arkc", None, 5, 0, (7, 3)),
				],
		)
def test_step_cost(method, estimator, s, m, expects):
	assert step_cost(method, estimator, s, m) == expects


class TestAdaptiveConfig:

	def test_defaults(self):
		config = AdaptiveConfig(1e-3)
		assert config.estimator is Estimator.VARIANT_2
		assert config.fac == 0.8
		assert config.step_bounds(2.0) == (2e-12, 2.0)

	def test_from_dict(self):
		config = AdaptiveConfig.from_dict({"tol": "1e-4", "estimator": 1, "h_min": 1e-6})
		assert config.tol == 1e-4
		assert config.estimator is Estimator.VARIANT_1
		assert config.step_bounds(1.0) == (1e-6, 1.0)

	@pytest.mark.parametrize(
			"kwargs",
			[
					{"tol": 0},
					{"tol": -1e-3},
					{"tol": 1e-3, "fac": 1.0},
					{"tol": 1e-3, "growth_cap": 1.0},
					{"tol": 1e-3, "shrink_floor": 0.0},
					{"tol": 1e-3, "h_init": 0.0},
					],
			)
	def test_invalid(self, kwargs):
		with pytest.raises(ValueError):
			AdaptiveConfig(**kwargs)

	def test_inverted_bounds(self):
		with pytest.raises(ValueError, match="must not exceed"):
			AdaptiveConfig(1e-3, h_min=0.5, h_max=0.1).step_bounds(1.0)


class TestIntegrateAdaptive:

	@pytest.mark.parametrize("method", ADAPTIVE_METHODS)
	@pytest.mark.parametrize("estimator", [Estimator.VARIANT_1, Estimator.VARIANT_2])
	def test_linear(self, method: str, estimator: Estimator):
		ode = make_problem("linear")
		config = AdaptiveConfig(1e-5, estimator=estimator)
		result = integrate_adaptive(ode, config, method)

		assert result.t == ode.T
		assert result.stats.n_accept > 0
		assert max_norm(result.y - ode.exact(ode.T)) < 1e-3
		assert audit_counters(result.trace, result.stats, method, estimator)

	@pytest.mark.parametrize("method", ADAPTIVE_METHODS)
	def test_advection_diffusion(self, method: str):
		ode = build_example("ex2a", N=16)
		config = AdaptiveConfig(1e-4)
		result = integrate_adaptive(ode, config, method)

		assert rms_norm(result.y - ode.exact(ode.T)) < 1e-2
		assert audit_counters(result.trace, result.stats, method, config.estimator)
		assert result.trace[-1].accepted
		assert sum(record.h for record in result.trace if record.accepted) == pytest.approx(ode.T)

	def test_nprkc_records_blocks(self):
		ode = build_example("ex2b", N=32)
		result = integrate_adaptive(ode, AdaptiveConfig(1e-3), "nprkc")

		assert all(record.s >= 2 and record.m >= 1 for record in result.trace)

	def test_ex2a_variant_2(self):
		ode = build_example("ex2a")
		result = integrate_adaptive(ode, AdaptiveConfig(1e-2, estimator=2), "nprkc")

		assert rms_norm(result.y - ode.exact(ode.T)) <= 1e-2
		assert audit_counters(result.trace, result.stats, "nprkc", 2)
		assert 265 <= result.stats.nfe <= 1062

	def test_ex2c_variant_1(self):
		ode = build_example("ex2c")
		result = integrate_adaptive(ode, AdaptiveConfig(1e-5, estimator=1), "nprkc")

		assert rms_norm(result.y - ode.exact(ode.T)) <= 1e-4
		assert audit_counters(result.trace, result.stats, "nprkc", 1)

	@pytest.mark.parametrize("method", ["rk3", "midpoint", "rk4m"])
	def test_not_adaptive(self, method: str):
		with pytest.raises(ValueError, match="cannot be integrated adaptively"):
			integrate_adaptive(make_problem("linear"), AdaptiveConfig(1e-3), method)

	def test_persistent_nonfinite(self):
		ode = SplitOde(
				f_D=lambda y: -y,
				f_A=lambda y: numpy.full_like(y, numpy.nan),
				y0=numpy.ones(2),
				)

		with pytest.raises(IntegrationError, match="consecutive non-finite steps"):
			integrate_adaptive(ode, AdaptiveConfig(1e-3), "nprkc")

	def test_underflow(self):
		config = AdaptiveConfig(1e-300, h_min=1e-3)

		with pytest.raises(StepSizeUnderflowError) as excinfo:
			integrate_adaptive(make_problem("linear"), config, "nprkc")

		assert excinfo.value.t == 0.0
		assert excinfo.value.h == pytest.approx(1e-3)

	def test_max_steps(self):
		config = AdaptiveConfig(1e-8, max_steps=3)

		with pytest.raises(IntegrationError, match="limit of 3 steps"):
			integrate_adaptive(make_problem("linear"), config, "nprkc")


class TestAuditCounters:

	def _trace(self):
		return [
				StepRecord(0.0, 0.1, 5, 2, 1e-4, True, 5, 8),
				StepRecord(0.1, 0.2, 5, 2, 1e-1, False, 5, 8, "rejected"),
				StepRecord(0.1, 0.1, 5, 2, float("nan"), False, 3, 2, "nonfinite"),
				]

	def test_consistent(self):
		stats = StepStats(n_accept=1, n_reject=2, nfd=13, nfa=18)
		assert audit_counters(self._trace(), stats)
		assert audit_counters(self._trace(), stats, "nprkc", 2)

	def test_wrong_step_cost(self):
		stats = StepStats(n_accept=1, n_reject=2, nfd=13, nfa=18)
		assert not audit_counters(self._trace(), stats, "nprkc", 1)

	@pytest.mark.parametrize(
			"kwargs",
			[
					{"n_accept": 2, "n_reject": 2, "nfd": 13, "nfa": 18},
					{"n_accept": 1, "n_reject": 1, "nfd": 13, "nfa": 18},
					{"n_accept": 1, "n_reject": 2, "nfd": 14, "nfa": 18},
					{"n_accept": 1, "n_reject": 2, "nfd": 13, "nfa": 17},
					],
			)
	def test_mismatch(self, kwargs):
		assert not audit_counters(self._trace(), StepStats(**kwargs))


class TestIntegrateFixed:

	def _linear_errors(self, method: str, hs):
		ode = make_problem("linear")
		return [max_norm(integrate_fixed(ode, method, h).y - ode.exact(ode.T)) for h in hs]

	def test_rk3_convergence(self):
		hs = [2.0**-k for k in range(3, 7)]
		assert 2.75 <= fit_slope(hs, self._linear_errors("rk3", hs)) <= 3.25

	@pytest.mark.parametrize("method", ["nprkc", "prkc", "arkc"])
	def test_partitioned_convergence(self, method: str):
		hs = [2.0**-k for k in range(3, 7)]
		assert 1.8 <= fit_slope(hs, self._linear_errors(method, hs)) <= 3.25

	def test_nprkc_ad1d_convergence(self):
		ode = build_example("ex2a", N=16)
		hs = [2.0**-k for k in range(8, 12)]
		errors = [rms_norm(integrate_fixed(ode, "nprkc", h, s=6).y - ode.exact(ode.T)) for h in hs]
		assert 1.8 <= fit_slope(hs, errors) <= 2.2

	def test_counts(self):
		ode = make_problem("linear")
		result = integrate_fixed(ode, "nprkc", 0.1, s=3, m=2)

		assert len(result.trace) == result.stats.n_accept == 10
		assert (result.stats.nfd, result.stats.nfa) == (30, 80)
		assert result.t == ode.T
		assert audit_counters(result.trace, result.stats, "nprkc", None)

	def test_truncated_last_step(self):
		result = integrate_fixed(make_problem("linear"), "rk3", 0.3)

		assert len(result.trace) == 4
		assert result.trace[-1].h == pytest.approx(0.1)
		assert result.t == 1.0

	def test_bad_step(self):
		with pytest.raises(ValueError, match="must be positive"):
			integrate_fixed(make_problem("linear"), "rk3", 0.0)

	def test_bad_stages(self):
		with pytest.raises(ValueError, match="at least 2 stages"):
			integrate_fixed(make_problem("linear"), "rkc", 0.1, s=1)

	def test_bad_blocks(self):
		with pytest.raises(ValueError, match="at least 1 advection block"):
			integrate_fixed(make_problem("linear"), "nprkc", 0.1, m=0)

	def test_blow_up_reports_step(self):
		ode = SplitOde(f_A=lambda y: 1e200 * y, y0=numpy.ones(1))

		with pytest.raises(NonFiniteStateError, match="of step 0") as excinfo:
			integrate_fixed(ode, "midpoint", 1.0)

		assert excinfo.value.step == 0

	def test_wave_stability_contrast(self):
		ode = build_example("ex1")
		h = 1 / 30

		result = integrate_fixed(ode, "nprkc", h, s=22, m=13)
		assert max_norm(result.y) < 1e4

		try:
			unstable = integrate_fixed(ode, "prkc", h, s=22)
		except NonFiniteStateError:
			pass
		else:
			assert max_norm(unstable.y) > 1e6
