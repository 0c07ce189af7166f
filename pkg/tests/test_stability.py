# 3rd party
import numpy
import pytest
from domdf_python_tools.paths import PathPlus

# this package
from stabrkc.chebyshev import DEFAULT_ETA, rkc_coeffs
from stabrkc.stability import (
		CERTIFY_TOL,
		StabilityGrid,
		certify_rectangle,
		eval_R_ddot,
		eval_R_s,
		real_axis_extent,
		rk4m_factor,
		scan_region,
		stability_function,
		stage_poly
		)


class TestRealAxisExtent:

	def test_two_stages(self):
		assert real_axis_extent(2) == pytest.approx(2.0, abs=1e-9)

	@pytest.mark.parametrize("s", [5, 15, 50, 100])
	def test_lower_bound(self, s: int):
		assert real_axis_extent(s) >= 0.65 * s**2

	def test_ten_stages(self):
		assert 64 <= real_axis_extent(10) < 65
		assert abs(eval_R_s(-65.0, 10)) == pytest.approx(1.298, abs=2e-3)

	def test_within(self):
		s = 15
		beta = real_axis_extent(s)
		p_values = numpy.linspace(-beta, 0, 2001)
		assert numpy.abs(eval_R_s(p_values, s)).max() <= 1 + CERTIFY_TOL


class TestCertifyRectangle:

	@pytest.mark.parametrize("s", [5, 15, 50])
	def test_default_extent(self, s: int):
		assert certify_rectangle(s, 2) <= 1 + CERTIFY_TOL

	@pytest.mark.parametrize("m", [2, 4, 8])
	def test_ten_stages(self, m: int):
		assert certify_rectangle(10, m, L=0.64) <= 1 + CERTIFY_TOL

	def test_too_long(self):
		assert certify_rectangle(10, 2, L=0.66) > 1 + CERTIFY_TOL


class TestRK4MFactor:

	@pytest.mark.parametrize("m", [1, 3, 7])
	def test_bounded(self, m: int):
		q = numpy.linspace(-2.15 * m, 2.15 * m, 4001)
		assert numpy.abs(rk4m_factor(q, m)).max() <= 1 + CERTIFY_TOL

	def test_unbounded_beyond(self):
		assert abs(rk4m_factor(2.2)) > 1
		assert abs(rk4m_factor(4.4, 2)) > 1

	def test_at_zero(self):
		assert rk4m_factor(0.0, 5) == 1

	def test_bad_m(self):
		with pytest.raises(ValueError, match="'m' must be at least 1"):
			rk4m_factor(1.0, 0)


def test_stage_poly_at_zero():
	coeffs = rkc_coeffs(7)
	for j in range(8):
		assert stage_poly(j, 0.0, coeffs) == pytest.approx(1.0, rel=1e-13)


def test_stage_poly_first_order():
	coeffs = rkc_coeffs(7)
	delta = 1e-6
	for j in range(1, 8):
		slope = (stage_poly(j, delta, coeffs) - stage_poly(j, -delta, coeffs)) / (2 * delta)
		assert slope == pytest.approx(coeffs.c[j], rel=1e-6)


class TestStabilityFunction:

	def test_rkc_uses_combined_argument(self):
		evaluator = stability_function("rkc", s=6)
		assert evaluator(-3.0, 0.5) == pytest.approx(eval_R_s(-3.0 + 0.5j, 6))

	def test_nprkc(self):
		evaluator = stability_function("nprkc", s=6, m=2)
		assert evaluator(-3.0, 0.5) == pytest.approx(eval_R_ddot(-3.0, 0.5, 6, 2, DEFAULT_ETA))

	@pytest.mark.parametrize("method", ["rkc", "prkc", "arkc", "nprkc"])
	def test_one_at_origin(self, method: str):
		assert abs(stability_function(method, s=5)(0.0, 0.0)) == pytest.approx(1.0)

	def test_no_region(self):
		with pytest.raises(ValueError, match="No stability region"):
			stability_function("rk3", s=5)


class TestScanRegion:

	def test_nprkc_rectangle(self):
		grid = scan_region("nprkc", (-66, 1), (-9, 9), s=10, m=4)

		assert grid.contains_rectangle(-64, 0, -8.6, 8.6)
		assert not grid.contains_rectangle(-66, 0, -8.6, 8.6)
		assert grid.max_abs() > 1

	def test_default_counts(self):
		grid = scan_region("rkc", (-10, 0), (-1, 1), s=4)
		assert grid.values.shape == (100, 100)
		assert grid.np == grid.nq == 100

		grid = scan_region("rkc", (-60, 0), (-1, 1), s=4)
		assert grid.np == 241

	def test_callable(self):
		grid = scan_region(lambda p, q: p + 0 * q, (-2, 0), (-1, 1), 3, 5)
		numpy.testing.assert_allclose(grid.values[:, 0], [2, 1, 0])

	@pytest.mark.parametrize(
			"p_range, q_range",
			[
					((0, -1), (-1, 1)),
					((-1, -1), (-1, 1)),
					((-1, 0), (1, -1)),
					((-1, 0), (0, 0)),
					],
			)
	def test_bad_ranges(self, p_range, q_range):
		with pytest.raises(ValueError, match="Invalid"):
			scan_region("rkc", p_range, q_range, s=3)

	def test_too_few_samples(self):
		with pytest.raises(ValueError, match="At least 2 samples"):
			scan_region("rkc", (-1, 0), (-1, 1), 1, 5, s=3)

	def test_rectangle_outside_grid(self):
		grid = scan_region("rkc", (-10, 0), (-1, 1), 11, 3, s=4)
		assert not grid.contains_rectangle(-11, 0, -1, 1)
		assert not grid.contains_rectangle(-5, 0, -2, 1)

	def test_to_csv(self, tmp_pathplus: PathPlus):
		grid = scan_region("nprkc", (-4, 0), (-1, 1), 5, 3, s=3)
		written = grid.to_csv(tmp_pathplus / "out" / "region.csv")

		lines = written.read_lines()
		while lines and not lines[-1]:
			lines.pop()

		assert lines[0] == "p,q,absR"
		assert len(lines) == 1 + 5 * 3
		assert lines[1].startswith("-4.0,-1.0,")
		assert lines[-1].startswith("0.0,1.0,")


def test_grid_shape_validation():
	with pytest.raises(ValueError, match="Expected values of shape"):
		StabilityGrid(-1, 0, -1, 1, 3, 3, numpy.zeros((3, 2)))
