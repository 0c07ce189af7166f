#!/usr/bin/env python3
#
#  stability.py
"""
Stability functions of the RKC family, region scans and rectangle certification.

All evaluators accept numpy arrays for ``p`` and ``q`` and broadcast them.
"""
#
#  Copyright © 2020-2024 Dominic Davis-Foster <dominic@davis-foster.co.uk>
#
#  Permission is hereby granted, free of charge, to any person obtaining a copy
#  of this software and associated documentation files (the "Software"), to deal
#  in the Software without restriction, including without limitation the rights
#  to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
#  copies of the Software, and to permit persons to whom the Software is
#  furnished to do so, subject to the following conditions:
#
#  The above copyright notice and this permission notice shall be included in all
#  copies or substantial portions of the Software.
#
#  THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
#  EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF
#  MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT.
#  IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM,
#  DAMAGES OR OTHER LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR
#  OTHERWISE, ARISING FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE
#  OR OTHER DEALINGS IN THE SOFTWARE.
#

# stdlib
import functools
import logging
import math
from typing import Callable, Optional, Tuple, Union

# 3rd party
import attr
import numpy
from attr_utils.docstrings import add_attrs_doc
from domdf_python_tools.paths import PathPlus
from domdf_python_tools.typing import PathLike

# this package
from stabrkc.chebyshev import DEFAULT_ETA, ChebCoeffs, PRKCAlphas, arkc_eta, cheb_eval, prkc_alphas, rkc_coeffs
from stabrkc.enums import Kind, MethodId
from stabrkc.utils import format_float

__all__ = [
		"CERTIFY_TOL",
		"stage_poly",
		"eval_R_s",
		"eval_R_tilde",
		"eval_R_hat",
		"eval_R_ddot",
		"rk4m_factor",
		"stability_function",
		"StabilityGrid",
		"scan_region",
		"certify_rectangle",
		"real_axis_extent",
		]

logger = logging.getLogger(__name__)

#: Slack above 1 allowed when certifying :math:`|R| \le 1` on a grid.
CERTIFY_TOL: float = 1e-12

Value = Union[float, complex, numpy.ndarray]
Evaluator = Callable[[Value, Value], Value]


def stage_poly(j: int, p: Value, coeffs: ChebCoeffs) -> Value:
	"""
	The amplification of stage ``j`` of the Chebyshev block, :math:`a_j + b_j T_j(\\omega_0 + \\omega_1 p)`.

	:param j: Between 0 and ``coeffs.s``.
	:param p:
	:param coeffs:
	"""

	return coeffs.a[j] + coeffs.b[j] * cheb_eval(Kind.FIRST, j, coeffs.omega0 + coeffs.omega1 * p)


def eval_R_s(p: Value, s: int, eta: float = DEFAULT_ETA) -> Value:
	"""
	The stability function of the ``s``-stage RKC method.

	``p`` may be complex.

	:param p:
	:param s:
	:param eta:
	"""

	return stage_poly(s, p, rkc_coeffs(s, eta))


def eval_R_tilde(
		p: Value,
		q: Value,
		s: int,
		eta: float = DEFAULT_ETA,
		alphas: Optional[PRKCAlphas] = None,
		) -> Value:
	"""
	The stability function of the PRKC method at :math:`(p, q)`.

	Built from the stage values :math:`R_{s-1}`, :math:`R_s` and :math:`K_s` of one step on the test equation,
	which expands to the closed-form polynomial in :math:`p` and :math:`q`.

	:param p: :math:`h \\lambda_D`
	:param q: :math:`h \\lambda_A / i`
	:param s:
	:param eta:
	:param alphas: Defaults to :func:`~stabrkc.chebyshev.prkc_alphas` with ``r = 1``, ``alpha3 = 0``.
	"""

	coeffs = rkc_coeffs(s, eta)
	if alphas is None:
		alphas = prkc_alphas(c_s_minus_1=coeffs.c[s - 1])

	a0, a1, a2, a3, a4, a5, a6, a7 = alphas
	z = 1j * numpy.asarray(q)

	k0 = 1 + a0 * z
	r_s = stage_poly(s, p, coeffs) * k0
	r_sm1 = stage_poly(s - 1, p, coeffs) * k0

	k_s = r_s + z * (a1 + a2 * k0 + a3 * r_sm1)
	return r_s + z * (a4 + a5 * k0 + a6 * r_sm1 + a7 * k_s)


def eval_R_hat(p: Value, q: Value, s: int, eta: Optional[float] = None) -> Value:
	"""
	The stability function of the ARKC method at :math:`(p, q)`.

	:param p:
	:param q:
	:param s:
	:param eta: Defaults to :func:`~stabrkc.chebyshev.arkc_eta`.
	"""

	if eta is None:
		eta = arkc_eta(s)

	coeffs = rkc_coeffs(s, eta)
	omega0, omega1 = coeffs.omega0, coeffs.omega1
	z = 1j * numpy.asarray(q)
	p = numpy.asarray(p)

	ratio = cheb_eval(Kind.SECOND, s - 1, omega0 + omega1 * p) / cheb_eval(Kind.SECOND, s - 1, omega0)
	weight = 0.5 * omega1 + (1 - 0.5 * omega1) * ratio

	return stage_poly(s, p, coeffs) + weight * (1 + 0.5 * omega1 * p) * (z + 0.5 * z**2)


def rk4m_factor(q: Value, m: int = 1) -> Value:
	"""
	The advection factor of the NPRKC stability function.

	This is the stability function of :func:`~stabrkc.methods.rk4m_step` at :math:`z = iq`.

	:param q:
	:param m:
	"""

	if m < 1:
		raise ValueError(f"'m' must be at least 1, not {m}")

	z = 1j * numpy.asarray(q) / m
	prefix = 1 + z / 2
	tail = 1 + z / 2 + z**2 / 4 + z**3 / 24

	return (prefix * tail)**m


def eval_R_ddot(p: Value, q: Value, s: int, m: int = 1, eta: float = DEFAULT_ETA) -> Value:
	"""
	The stability function of the NPRKC method at :math:`(p, q)`.

	:param p:
	:param q:
	:param s:
	:param m:
	:param eta:
	"""

	return eval_R_s(p, s, eta) * rk4m_factor(q, m)


def stability_function(
		method: Union[MethodId, str],
		s: int,
		m: int = 1,
		eta: Optional[float] = None,
		) -> Evaluator:
	"""
	Returns a function of :math:`(p, q)` giving the stability function of ``method``.

	RKC is applied to the combined equation, so its value at :math:`(p, q)` is :math:`R_s(p + iq)`.

	:param method: One of ``rkc``, ``prkc``, ``arkc`` or ``nprkc``.
	:param s:
	:param m: Only used by ``nprkc``.
	:param eta: Defaults to :data:`~stabrkc.chebyshev.DEFAULT_ETA`, or the ARKC schedule for ``arkc``.
	"""

	method = MethodId(method)

	if method is MethodId.ARKC:
		return functools.partial(eval_R_hat, s=s, eta=eta)

	if eta is None:
		eta = DEFAULT_ETA

	if method is MethodId.RKC:
		return lambda p, q: eval_R_s(numpy.asarray(p) + 1j * numpy.asarray(q), s, eta)
	elif method is MethodId.PRKC:
		return functools.partial(eval_R_tilde, s=s, eta=eta)
	elif method is MethodId.NPRKC:
		return functools.partial(eval_R_ddot, s=s, m=m, eta=eta)
	else:
		raise ValueError(f"No stability region is defined for {method.value!r}")


def _check_positive_count(instance, attribute: attr.Attribute, value: int):
	if value < 2:
		raise ValueError(f"'{attribute.name}' must be at least 2, not {value}")


@add_attrs_doc
@attr.s(slots=True, eq=False)
class StabilityGrid:
	"""
	Samples of :math:`|R(p, q)|` on a uniform rectangular grid.

	``values[i, k]`` is the sample at ``p_values[i]``, ``q_values[k]``.
	"""

	p_min: float = attr.ib(converter=float)
	p_max: float = attr.ib(converter=float)
	q_min: float = attr.ib(converter=float)
	q_max: float = attr.ib(converter=float)

	#: The number of samples along the ``p`` axis.
	np: int = attr.ib(converter=int, validator=_check_positive_count)

	#: The number of samples along the ``q`` axis.
	nq: int = attr.ib(converter=int, validator=_check_positive_count)

	values: numpy.ndarray = attr.ib(converter=numpy.asarray)

	@values.validator
	def _check_values(self, attribute: attr.Attribute, value: numpy.ndarray):
		if value.shape != (self.np, self.nq):
			raise ValueError(f"Expected values of shape {(self.np, self.nq)}, got {value.shape}")

	@property
	def p_values(self) -> numpy.ndarray:
		"""
		The sample abscissae.
		"""

		return numpy.linspace(self.p_min, self.p_max, self.np)

	@property
	def q_values(self) -> numpy.ndarray:
		"""
		The sample ordinates.
		"""

		return numpy.linspace(self.q_min, self.q_max, self.nq)

	def max_abs(self) -> float:
		"""
		The largest sampled value.
		"""

		return float(self.values.max())

	def contains_rectangle(self, p0: float, p1: float, q0: float, q1: float, tol: float = CERTIFY_TOL) -> bool:
		"""
		Returns whether every sample in :math:`[p_0, p_1] \\times [q_0, q_1]` has :math:`|R| \\le 1 + tol`.

		The rectangle must lie inside the grid.

		:param p0:
		:param p1:
		:param q0:
		:param q1:
		:param tol:
		"""

		spacing = 1e-9 * max(1.0, abs(self.p_min), abs(self.p_max), abs(self.q_min), abs(self.q_max))
		if p0 < self.p_min - spacing or p1 > self.p_max + spacing:
			return False
		if q0 < self.q_min - spacing or q1 > self.q_max + spacing:
			return False

		p_mask = (self.p_values >= p0 - spacing) & (self.p_values <= p1 + spacing)
		q_mask = (self.q_values >= q0 - spacing) & (self.q_values <= q1 + spacing)
		inside = self.values[numpy.ix_(p_mask, q_mask)]

		return bool(inside.size) and bool((inside <= 1 + tol).all())

	def to_csv(self, filename: PathLike) -> PathPlus:
		"""
		Write the grid to ``filename`` as ``p,q,absR`` rows, ``p`` varying slowest.

		:param filename:

		:returns: The path written to.
		"""

		filename = PathPlus(filename)
		filename.parent.maybe_make(parents=True)

		lines = ["p,q,absR"]
		q_strings = [format_float(q) for q in self.q_values]
		for p, row in zip(self.p_values, self.values):
			p_string = format_float(p)
			lines.extend(f"{p_string},{q_string},{format_float(value)}" for q_string, value in zip(q_strings, row))

		filename.write_lines(lines)
		logger.info("Wrote %d x %d stability grid to %s", self.np, self.nq, filename)
		return filename


def _default_count(lower: float, upper: float) -> int:
	return max(100, math.ceil(4 * (upper - lower)) + 1)


def scan_region(
		method: Union[MethodId, str, Evaluator],
		p_range: Tuple[float, float],
		q_range: Tuple[float, float],
		np: Optional[int] = None,
		nq: Optional[int] = None,
		*,
		s: int = 2,
		m: int = 1,
		eta: Optional[float] = None,
		) -> StabilityGrid:
	"""
	Sample :math:`|R|` over a rectangle of the :math:`(p, q)` plane.

	:param method: A method id (see :func:`~.stability_function`) or a function of :math:`(p, q)`.
	:param p_range: ``(p_min, p_max)``
	:param q_range: ``(q_min, q_max)``
	:param np: Samples along ``p``. Defaults to 4 per unit, at least 100.
	:param nq: Samples along ``q``. Defaults to 4 per unit, at least 100.
	:param s:
	:param m:
	:param eta:
	"""

	p_min, p_max = map(float, p_range)
	q_min, q_max = map(float, q_range)

	if not p_min < p_max:
		raise ValueError(f"Invalid p range [{p_min}, {p_max}]")
	if not q_min < q_max:
		raise ValueError(f"Invalid q range [{q_min}, {q_max}]")

	if np is None:
		np = _default_count(p_min, p_max)
	if nq is None:
		nq = _default_count(q_min, q_max)
	if np < 2 or nq < 2:
		raise ValueError(f"At least 2 samples per axis are required, got {np} x {nq}")

	if callable(method):
		evaluator = method
	else:
		evaluator = stability_function(method, s=s, m=m, eta=eta)

	p_grid, q_grid = numpy.meshgrid(
			numpy.linspace(p_min, p_max, np),
			numpy.linspace(q_min, q_max, nq),
			indexing="ij",
			)
	values = numpy.abs(evaluator(p_grid, q_grid))
	values = numpy.broadcast_to(values, (np, nq)).astype(float)

	logger.debug("Scanned %d x %d grid over [%g, %g] x [%g, %g]", np, nq, p_min, p_max, q_min, q_max)
	return StabilityGrid(p_min, p_max, q_min, q_max, np, nq, values)


def certify_rectangle(
		s: int,
		m: int,
		eta: float = DEFAULT_ETA,
		L: float = 0.65,
		np: Optional[int] = None,
		nq: Optional[int] = None,
		) -> float:
	"""
	Returns the maximum of :math:`|\\ddot{R}_{s,m}|` over :math:`[-L s^2, 0] \\times [-2.15 m, 2.15 m]`.

	The rectangle is certified when the result is at most ``1 + CERTIFY_TOL``.

	:param s:
	:param m:
	:param eta:
	:param L: The real-axis extent per :math:`s^2`.
	:param np: Samples along ``p``. Defaults to 10 per unit length, at least 200.
	:param nq: Samples along ``q``. Defaults to 10 per unit length, at least 200.
	"""

	p_extent = L * s**2
	q_extent = 2.15 * m

	if np is None:
		np = max(200, math.ceil(10 * p_extent) + 1)
	if nq is None:
		nq = max(200, math.ceil(20 * q_extent) + 1)

	# The stability function factorises, so the grid maximum is the product of axis maxima.
	p_values = numpy.linspace(-p_extent, 0.0, np)
	q_values = numpy.linspace(-q_extent, q_extent, nq)
	p_max = float(numpy.abs(eval_R_s(p_values, s, eta)).max())
	q_max = float(numpy.abs(rk4m_factor(q_values, m)).max())

	result = p_max * q_max
	logger.debug("certify_rectangle(s=%d, m=%d, L=%g) -> %r", s, m, L, result)
	return result


@functools.lru_cache(maxsize=None)
def real_axis_extent(s: int, eta: float = DEFAULT_ETA, tol: float = CERTIFY_TOL) -> float:
	"""
	The largest :math:`\\beta` with :math:`|R_s(p)| \\le 1` on :math:`[-\\beta, 0]`.

	A fine scan locates the first sample outside the region; bisection then refines the boundary.

	:param s:
	:param eta:
	:param tol: Slack above 1 tolerated in :math:`|R_s|`.
	"""

	coeffs = rkc_coeffs(s, eta)

	def inside(p: Value) -> numpy.ndarray:
		return numpy.abs(stage_poly(s, p, coeffs)) <= 1 + tol

	upper = 2.5 * s**2 + 4
	samples = max(4000, 400 * s)
	p_values = numpy.linspace(0.0, -upper, samples)
	outside = numpy.flatnonzero(~inside(p_values))

	if not outside.size:
		return upper

	good = float(p_values[outside[0] - 1])
	bad = float(p_values[outside[0]])

	for _ in range(100):
		mid = 0.5 * (good + bad)
		if mid in {good, bad}:
			break
		if inside(mid):
			good = mid
		else:
			bad = mid

	return -good
