#!/usr/bin/env python3
#
#  adaptive.py
"""
Local error estimation, step size control and the integration drivers.

.. autosummary::

	~stabrkc.adaptive.AdaptiveConfig
	~stabrkc.adaptive.integrate_adaptive
	~stabrkc.adaptive.integrate_fixed
	~stabrkc.adaptive.audit_counters
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
import logging
import math
from typing import Callable, List, NamedTuple, Optional, Sequence, Tuple, Union

# 3rd party
import attr
import numpy
from attr_utils.docstrings import add_attrs_doc
from attr_utils.serialise import serde

# this package
from stabrkc.chebyshev import DEFAULT_ETA, MAX_STAGES, ChebCoeffs, arkc_eta, prkc_alphas, rkc_coeffs
from stabrkc.enums import Estimator, MethodId
from stabrkc.errors import IntegrationError, NonFiniteStateError, StepSizeUnderflowError
from stabrkc.methods import (
		StepOutput,
		arkc_step,
		midpoint_step,
		nprkc_step,
		prkc_rk3_step,
		prkc_step,
		rk4m_step,
		rkc_step,
		table1_cost
		)
from stabrkc.ode import SplitOde, StepStats
from stabrkc.stability import real_axis_extent
from stabrkc.utils import rms_norm

__all__ = [
		"STAGE_FACTOR",
		"BLOCK_FACTOR",
		"MAX_NONFINITE",
		"AdaptiveConfig",
		"ErrorEstimate",
		"StepRecord",
		"IntegrationResult",
		"est_err_D",
		"embedded_tilde_Ks",
		"est_err_A",
		"combine_err",
		"new_h",
		"select_s_m",
		"select_stages",
		"step_cost",
		"audit_counters",
		"integrate_adaptive",
		"integrate_fixed",
		]

logger = logging.getLogger(__name__)

#: Real-axis stability extent per :math:`s^2` assumed by the stage selection.
STAGE_FACTOR: float = 0.65

#: Imaginary-axis stability extent per advection block assumed by the stage selection.
BLOCK_FACTOR: float = 2.15

#: The number of consecutive non-finite attempts after which :func:`~.integrate_adaptive` gives up.
MAX_NONFINITE: int = 20

_ADAPTIVE_METHODS = frozenset({MethodId.NPRKC, MethodId.RKC, MethodId.PRKC, MethodId.ARKC})


def _check_fac(instance, attribute: attr.Attribute, value: float):
	if not 0 < value < 1:
		raise ValueError(f"'fac' must be between 0 and 1, not {value}")


def _check_positive(instance, attribute: attr.Attribute, value: Optional[float]):
	if value is not None and not value > 0:
		raise ValueError(f"'{attribute.name}' must be positive, not {value}")


def _optional_float(value: Optional[float]) -> Optional[float]:
	return None if value is None else float(value)


@serde
@add_attrs_doc
@attr.s(slots=True)
class AdaptiveConfig:
	"""
	Settings for :func:`~.integrate_adaptive`.

	Step bounds left as :py:obj:`None` are derived from the problem's time span.
	"""

	#: The local error tolerance.
	tol: float = attr.ib(converter=float, validator=_check_positive)

	#: Which NPRKC error estimator to use.
	estimator: Estimator = attr.ib(default=Estimator.VARIANT_2, converter=Estimator)

	#: The safety factor of the step size controller.
	fac: float = attr.ib(default=0.8, converter=float, validator=_check_fac)

	#: The first step size tried. Defaults to :math:`\min((T - t_0)/100, 10/\max(\rho_D, 1))`.
	h_init: Optional[float] = attr.ib(default=None, converter=_optional_float, validator=_check_positive)

	#: The smallest step size allowed. Defaults to :math:`10^{-12} (T - t_0)`.
	h_min: Optional[float] = attr.ib(default=None, converter=_optional_float, validator=_check_positive)

	#: The largest step size allowed. Defaults to :math:`T - t_0`.
	h_max: Optional[float] = attr.ib(default=None, converter=_optional_float, validator=_check_positive)

	#: The largest ratio between consecutive step sizes.
	growth_cap: float = attr.ib(default=2.0, converter=float)

	#: The smallest ratio between consecutive step sizes.
	shrink_floor: float = attr.ib(default=0.1, converter=float)

	#: The damping parameter of the Chebyshev block. ARKC always uses its own schedule.
	eta: float = attr.ib(default=DEFAULT_ETA, converter=float)

	#: The largest number of attempted steps.
	max_steps: int = attr.ib(default=1_000_000, converter=int)

	@growth_cap.validator
	def _check_growth_cap(self, attribute: attr.Attribute, value: float):
		if not value > 1:
			raise ValueError(f"'growth_cap' must be greater than 1, not {value}")

	@shrink_floor.validator
	def _check_shrink_floor(self, attribute: attr.Attribute, value: float):
		if not 0 < value < 1:
			raise ValueError(f"'shrink_floor' must be between 0 and 1, not {value}")

	def step_bounds(self, span: float) -> Tuple[float, float]:
		"""
		Returns ``(h_min, h_max)`` for an integration over a time span of length ``span``.

		:param span:
		"""

		h_min = 1e-12 * span if self.h_min is None else self.h_min
		h_max = span if self.h_max is None else self.h_max

		if h_min > h_max:
			raise ValueError(f"'h_min' ({h_min}) must not exceed 'h_max' ({h_max})")

		return h_min, h_max


@add_attrs_doc
@attr.s(slots=True, frozen=True, eq=False)
class ErrorEstimate:
	"""
	The local error estimates of one step.
	"""

	#: The combined scalar error.
	err: float = attr.ib()

	#: The third order diffusion estimate, or the whole-step estimate for the comparison methods.
	err_D: Optional[numpy.ndarray] = attr.ib(default=None)

	#: The embedded first order diffusion estimate.
	err_tilde_D: Optional[numpy.ndarray] = attr.ib(default=None)

	#: The advection estimate.
	err_A: Optional[numpy.ndarray] = attr.ib(default=None)


@serde
@add_attrs_doc
@attr.s(slots=True, frozen=True)
class StepRecord:
	"""
	One attempted step of an integration.
	"""

	#: The time at the start of the step.
	t: float = attr.ib()

	#: The step size attempted.
	h: float = attr.ib()

	#: The number of Chebyshev stages (``0`` for pure Runge-Kutta methods).
	s: int = attr.ib()

	#: The number of NPRKC advection blocks (``0`` for other methods).
	m: int = attr.ib()

	#: The combined error estimate, ``nan`` when none was computed.
	err: float = attr.ib()

	#: Whether the step was accepted.
	accepted: bool = attr.ib()

	#: Diffusion evaluations made by the attempt.
	nfd: int = attr.ib()

	#: Advection evaluations made by the attempt.
	nfa: int = attr.ib()

	#: ``'accepted'``, ``'rejected'`` or ``'nonfinite'``.
	status: str = attr.ib(default="accepted")


class IntegrationResult(NamedTuple):
	"""
	The outcome of :func:`~.integrate_adaptive` or :func:`~.integrate_fixed`.
	"""

	#: The state at :attr:`~.IntegrationResult.t`.
	y: numpy.ndarray

	#: Step and evaluation counters.
	stats: StepStats

	#: Every attempted step, in order.
	trace: List[StepRecord]

	#: The time reached.
	t: float


def est_err_D(
		k0: numpy.ndarray,
		k_s: numpy.ndarray,
		f_d_k0: numpy.ndarray,
		f_d_ks: numpy.ndarray,
		h: float,
		) -> numpy.ndarray:
	"""
	The third order diffusion error estimate, :math:`(12(K_0 - K_s) + 6h(F(K_0) + F(K_s))) / 15`.

	:param k0:
	:param k_s:
	:param f_d_k0: :math:`F_D(K_0)`, retained by the stepper.
	:param f_d_ks: :math:`F_D(K_s)`, one extra evaluation.
	:param h:
	"""

	return (12 * (k0 - k_s) + 6 * h * (f_d_k0 + f_d_ks)) / 15


def embedded_tilde_Ks(k0: numpy.ndarray, k_s1: numpy.ndarray, s: int, coeffs: ChebCoeffs) -> numpy.ndarray:
	"""
	The embedded first order solution :math:`(1 - w) K_0 + w K_{s_1}`.

	:param k0:
	:param k_s1: The stage :math:`K_{s_1}`, :math:`s_1 = \\lfloor 4s/5 \\rfloor`.
	:param s:
	:param coeffs: The coefficients the step was taken with.
	"""

	if s < 2:
		raise ValueError(f"The embedded method needs at least 2 stages, not {s}")
	if coeffs.s != s:
		raise ValueError(f"Coefficients are for {coeffs.s} stages, not {s}")

	s1 = coeffs.s1
	w = 1 / (coeffs.b[s1] * coeffs.dt[s1] * coeffs.omega1)
	return (1 - w) * k0 + w * k_s1


def est_err_A(
		y_next: numpy.ndarray,
		k_s: numpy.ndarray,
		f_a_pairs: Sequence[Tuple[numpy.ndarray, numpy.ndarray]],
		h: float,
		m: int,
		) -> numpy.ndarray:
	"""
	The advection error estimate, :math:`y_{n+1} - K^*_m`.

	:math:`K^*` runs a second order method over the advection blocks, reusing their evaluations.

	:param y_next: The NPRKC solution.
	:param k_s: The last stage of the Chebyshev block.
	:param f_a_pairs: :attr:`StageData.f_a_pairs <stabrkc.methods.StageData.f_a_pairs>`
	:param h:
	:param m:
	"""

	if len(f_a_pairs) != m:
		raise ValueError(f"Expected {m} pairs of advection evaluations, got {len(f_a_pairs)}")

	k_star = k_s
	for fa0, fa1 in f_a_pairs:
		k_star = k_star - (h / m) * fa0 + (1.5 * h / m) * fa1

	return y_next - k_star


def combine_err(
		variant: Union[Estimator, int],
		*,
		err_D: Optional[numpy.ndarray] = None,
		err_tilde_D: Optional[numpy.ndarray] = None,
		err_A: Optional[numpy.ndarray] = None,
		norm: Callable[[numpy.ndarray], float] = rms_norm,
		) -> float:
	"""
	Combine the estimates needed by ``variant`` into a scalar error.

	Variant 1 is :math:`\\max(\\|err_D\\|, \\|err_A\\|)`;
	variant 2 is :math:`\\max(\\|\\widetilde{err}_D\\|, \\|err_A\\|^{2/3})`.

	:param variant:
	:param err_D:
	:param err_tilde_D:
	:param err_A:
	:param norm:
	"""

	variant = Estimator(variant)
	diffusion = err_D if variant is Estimator.VARIANT_1 else err_tilde_D

	if diffusion is None or err_A is None:
		raise ValueError(f"{variant!r} needs both a diffusion and an advection estimate")

	if variant is Estimator.VARIANT_1:
		return max(norm(diffusion), norm(err_A))
	else:
		return max(norm(diffusion), norm(err_A)**(2 / 3))


def new_h(
		h: float,
		err: float,
		tol: float,
		variant: Union[Estimator, int] = Estimator.VARIANT_2,
		fac: float = 0.8,
		*,
		order: Optional[int] = None,
		growth_cap: float = 2.0,
		shrink_floor: float = 0.1,
		h_min: float = 0.0,
		h_max: float = math.inf,
		) -> float:
	"""
	Propose the next step size, :math:`fac \\cdot h (tol/err)^{1/p}`.

	The ratio to ``h`` is clamped to ``[shrink_floor, growth_cap]`` and the result to ``[h_min, h_max]``.

	:param h:
	:param err:
	:param tol:
	:param variant: Selects ``p``: 3 for variant 1, 2 for variant 2.
	:param fac:
	:param order: Overrides ``p``.
	:param growth_cap:
	:param shrink_floor:
	:param h_min:
	:param h_max:
	"""

	p = Estimator(variant).order if order is None else order

	if err <= 0:
		ratio = growth_cap
	else:
		ratio = fac * (tol / err)**(1 / p)
		ratio = min(max(ratio, shrink_floor), growth_cap)

	return min(max(h * ratio, h_min), h_max)


def select_s_m(h: float, rho_D: float, rho_A: float) -> Tuple[int, int]:
	"""
	Choose the stage count and number of advection blocks for a step of size ``h``.

	:math:`s = \\lceil \\sqrt{h \\rho_D / 0.65 + 1} \\rceil` and :math:`m = \\lceil h \\rho_A / 2.15 \\rceil`,
	at least 2 and 1 respectively.

	:param h:
	:param rho_D:
	:param rho_A:
	"""

	if rho_D < 0 or rho_A < 0:
		raise ValueError("Spectral radii must be non-negative")

	s = max(2, math.ceil(math.sqrt(h * rho_D / STAGE_FACTOR + 1)))
	m = max(1, math.ceil(h * rho_A / BLOCK_FACTOR))
	return s, m


def _arkc_stages(reach: float) -> int:
	for s in range(2, MAX_STAGES + 1):
		if real_axis_extent(s, arkc_eta(s)) >= reach:
			return s

	return MAX_STAGES


def select_stages(method: Union[MethodId, str], h: float, rho_D: float, rho_A: float) -> Tuple[int, int]:
	"""
	Choose ``(s, m)`` for ``method``.

	NPRKC uses :func:`~.select_s_m`. RKC covers :math:`\\rho_D + \\rho_A` and PRKC covers :math:`\\rho_D`
	with the same :math:`0.65 s^2` rule. ARKC takes the smallest ``s`` whose real-axis extent covers
	:math:`h \\rho_D`. Only NPRKC has ``m > 0``.

	:param method:
	:param h:
	:param rho_D:
	:param rho_A:
	"""

	method = MethodId(method)

	if method is MethodId.NPRKC:
		return select_s_m(h, rho_D, rho_A)
	elif method is MethodId.RKC:
		return select_s_m(h, rho_D + rho_A, 0.0)[0], 0
	elif method is MethodId.PRKC:
		return select_s_m(h, rho_D, 0.0)[0], 0
	elif method is MethodId.ARKC:
		return _arkc_stages(h * rho_D), 0
	elif method is MethodId.RK4M:
		return 0, select_s_m(h, 0.0, rho_A)[1]
	else:
		return 0, 0


def step_cost(
		method: Union[MethodId, str],
		estimator: Union[Estimator, int, None],
		s: int,
		m: int,
		) -> Tuple[int, int]:
	"""
	The ``(nfd, nfa)`` cost of one completed adaptive step, including the error estimate.

	:param method:
	:param estimator: Only used by NPRKC; :py:obj:`None` for fixed step runs.
	:param s:
	:param m:
	"""

	method = MethodId(method)
	nfd, nfa = table1_cost(method, s, m)

	if estimator is None:
		return nfd, nfa

	if method is MethodId.NPRKC:
		extra = (1, 0) if Estimator(estimator) is Estimator.VARIANT_1 else (0, 0)
	elif method is MethodId.PRKC:
		extra = (2, 1)
	else:
		extra = (1, 1)

	return nfd + extra[0], nfa + extra[1]


def audit_counters(
		trace: Sequence[StepRecord],
		stats: StepStats,
		method: Union[MethodId, str, None] = None,
		estimator: Union[Estimator, int, None] = None,
		) -> bool:
	"""
	Check the counters of ``stats`` against the per-step counts in ``trace``.

	When ``method`` is given, every completed step must also cost exactly :func:`~.step_cost`.

	:param trace:
	:param stats:
	:param method:
	:param estimator:
	"""

	if sum(record.nfd for record in trace) != stats.nfd:
		return False
	if sum(record.nfa for record in trace) != stats.nfa:
		return False
	if sum(record.accepted for record in trace) != stats.n_accept:
		return False
	if sum(not record.accepted for record in trace) != stats.n_reject:
		return False

	if method is not None:
		for record in trace:
			if record.status == "nonfinite":
				continue
			if (record.nfd, record.nfa) != step_cost(method, estimator, record.s, record.m):
				return False

	return True


def _adaptive_attempt(
		method: MethodId,
		ode: SplitOde,
		y: numpy.ndarray,
		h: float,
		s: int,
		m: int,
		config: AdaptiveConfig,
		) -> Tuple[StepOutput, ErrorEstimate]:

	if method is MethodId.NPRKC:
		coeffs = rkc_coeffs(s, config.eta)
		out = nprkc_step(ode, y, h, coeffs, m)
		stages = out.stages
		err_A = est_err_A(out.y_next, stages.k_s, stages.f_a_pairs, h, m)

		if config.estimator is Estimator.VARIANT_1:
			err_D = est_err_D(stages.k0, stages.k_s, stages.f_d_k0, ode.f_D(stages.k_s), h)
			err = combine_err(config.estimator, err_D=err_D, err_A=err_A)
			return out, ErrorEstimate(err, err_D=err_D, err_A=err_A)

		err_tilde_D = stages.k_s - embedded_tilde_Ks(stages.k0, stages.k_s1, s, coeffs)
		err = combine_err(config.estimator, err_tilde_D=err_tilde_D, err_A=err_A)
		return out, ErrorEstimate(err, err_tilde_D=err_tilde_D, err_A=err_A)

	if method is MethodId.RKC:
		out = rkc_step(ode.f, y, h, rkc_coeffs(s, config.eta))
		f_yn = out.stages.f_yn
	elif method is MethodId.PRKC:
		coeffs = rkc_coeffs(s, config.eta)
		out = prkc_step(ode, y, h, coeffs, prkc_alphas(c_s_minus_1=coeffs.c[s - 1]))
		f_yn = ode.f_D(y) + out.stages.f_a_yn
	else:
		out = arkc_step(ode, y, h, rkc_coeffs(s, arkc_eta(s)))
		f_yn = out.stages.f_d_yn + out.stages.f_a_yn

	err_D = est_err_D(y, out.y_next, f_yn, ode.f(out.y_next), h)
	return out, ErrorEstimate(rms_norm(err_D), err_D=err_D)


def _attempt_counts(method: MethodId, nfd: int, nfa: int) -> Tuple[int, int]:
	# Methods applied to the whole right-hand side count each evaluation of f against both parts.
	if method.is_partitioned:
		return nfd, nfa
	return nfd + nfa, nfd + nfa


def integrate_adaptive(
		ode: SplitOde,
		config: AdaptiveConfig,
		method: Union[MethodId, str] = MethodId.NPRKC,
		) -> IntegrationResult:
	"""
	Integrate ``ode`` from ``t0`` to ``T`` with adaptive step size control.

	A step is accepted when its combined error is at most ``config.tol``.
	A step with a non-finite stage is rejected and retried with half the step size.

	:param ode:
	:param config:
	:param method: One of ``nprkc``, ``rkc``, ``prkc`` or ``arkc``.

	:raises: :exc:`~stabrkc.errors.StepSizeUnderflowError` if the step size falls below ``h_min``,
		or a step of size ``h_min`` is rejected.
	:raises: :exc:`~stabrkc.errors.IntegrationError` after :data:`~.MAX_NONFINITE` consecutive
		non-finite attempts, or when ``config.max_steps`` is reached.
	"""

	method = MethodId(method)
	if method not in _ADAPTIVE_METHODS:
		raise ValueError(f"{method.value!r} cannot be integrated adaptively")

	t, T = ode.t0, ode.T
	span = T - t
	h_min, h_max = config.step_bounds(span)
	y = numpy.array(ode.y0, dtype=float if numpy.isrealobj(ode.y0) else complex)

	stats = StepStats()
	trace: List[StepRecord] = []
	order = config.estimator.order if method is MethodId.NPRKC else 3
	estimator = config.estimator

	rho_D = float(ode.rho_D(y))
	rho_A = float(ode.rho_A(y))
	since_rho_D = since_rho_A = 0

	if config.h_init is None:
		h = min(span / 100, 10 / max(rho_D, 1))
	else:
		h = config.h_init
	h = min(max(h, h_min), h_max)

	nonfinite_run = 0
	end_slack = 1e-14 * max(1.0, abs(T))

	while T - t > end_slack:
		if len(trace) >= config.max_steps:
			raise IntegrationError(f"Reached the limit of {config.max_steps} steps at t={t!r}")

		if since_rho_D >= ode.rho_D_refresh:
			rho_D, since_rho_D = float(ode.rho_D(y)), 0
		if since_rho_A >= ode.rho_A_refresh:
			rho_A, since_rho_A = float(ode.rho_A(y)), 0

		last = t + h >= T - end_slack
		if last:
			h = T - t
		elif h < h_min:
			raise StepSizeUnderflowError(t, h)

		s, m = select_stages(method, h, rho_D, rho_A)
		if s > MAX_STAGES:
			h = STAGE_FACTOR * (MAX_STAGES**2 - 1) / (rho_D + (rho_A if method is MethodId.RKC else 0.0))
			last = False
			s, m = select_stages(method, h, rho_D, rho_A)

		try:
			out, estimate = _adaptive_attempt(method, ode, y, h, s, m, config)
		except NonFiniteStateError as e:
			nfd, nfa = _attempt_counts(method, e.nfd, e.nfa)
			err = math.nan
			out = None
		else:
			nfd, nfa = step_cost(method, estimator, s, m)
			err = estimate.err

		stats.count(nfd, nfa)

		if out is None or not math.isfinite(err):
			nonfinite_run += 1
			stats.n_reject += 1
			trace.append(StepRecord(t, h, s, m, math.nan, False, nfd, nfa, "nonfinite"))
			logger.debug("t=%r h=%r s=%d m=%d non-finite", t, h, s, m)

			if nonfinite_run >= MAX_NONFINITE:
				logger.info("Giving up after %d consecutive non-finite steps at t=%r", nonfinite_run, t)
				raise IntegrationError(f"{nonfinite_run} consecutive non-finite steps at t={t!r}")

			h = h / 2
			continue

		nonfinite_run = 0
		accepted = err <= config.tol
		trace.append(StepRecord(t, h, s, m, err, accepted, nfd, nfa, "accepted" if accepted else "rejected"))
		logger.debug("t=%r h=%r s=%d m=%d err=%r %s", t, h, s, m, err, "accepted" if accepted else "rejected")

		h_next = new_h(
				h,
				err,
				config.tol,
				config.estimator,
				config.fac,
				order=order,
				growth_cap=config.growth_cap,
				shrink_floor=config.shrink_floor,
				h_min=h_min,
				h_max=h_max,
				)

		if accepted:
			stats.n_accept += 1
			y = out.y_next
			t = T if last else t + h
			since_rho_D += 1
			since_rho_A += 1
		else:
			stats.n_reject += 1
			if h <= h_min:
				logger.info("Rejected a step of the minimum size at t=%r", t)
				raise StepSizeUnderflowError(t, h)

		h = h_next

	return IntegrationResult(y=y, stats=stats, trace=trace, t=T)


def _fixed_step(
		method: MethodId,
		ode: SplitOde,
		y: numpy.ndarray,
		h: float,
		s: int,
		m: int,
		eta: Optional[float],
		) -> numpy.ndarray:

	if method is MethodId.NPRKC:
		return nprkc_step(ode, y, h, rkc_coeffs(s, DEFAULT_ETA if eta is None else eta), m).y_next
	elif method is MethodId.RKC:
		return rkc_step(ode.f, y, h, rkc_coeffs(s, DEFAULT_ETA if eta is None else eta)).y_next
	elif method is MethodId.PRKC:
		coeffs = rkc_coeffs(s, DEFAULT_ETA if eta is None else eta)
		return prkc_step(ode, y, h, coeffs, prkc_alphas(c_s_minus_1=coeffs.c[s - 1])).y_next
	elif method is MethodId.ARKC:
		return arkc_step(ode, y, h, rkc_coeffs(s, arkc_eta(s) if eta is None else eta)).y_next
	elif method is MethodId.RK3:
		return rk4m_step(ode.f, y, h, 1)
	elif method is MethodId.RK4M:
		return rk4m_step(ode.f, y, h, m)
	elif method is MethodId.PRK3:
		return prkc_rk3_step(ode.f, y, h, prkc_alphas())
	else:
		return midpoint_step(ode.f, y, h)


def integrate_fixed(
		ode: SplitOde,
		method: Union[MethodId, str],
		h: float,
		*,
		s: Optional[int] = None,
		m: Optional[int] = None,
		eta: Optional[float] = None,
		) -> IntegrationResult:
	"""
	Integrate ``ode`` from ``t0`` to ``T`` with a constant step size, truncating the final step.

	:param ode:
	:param method:
	:param h:
	:param s: The number of Chebyshev stages. Chosen from the spectral radii at ``t0`` if omitted.
	:param m: The number of NPRKC advection blocks (or ``rk4m`` blocks). Chosen likewise if omitted.
	:param eta: Overrides the damping parameter.

	:raises: :exc:`~stabrkc.errors.NonFiniteStateError` with the step index if the solution blows up.
	"""

	method = MethodId(method)
	if not h > 0:
		raise ValueError(f"The step size must be positive, not {h}")

	y = numpy.array(ode.y0, dtype=float if numpy.isrealobj(ode.y0) else complex)
	chosen_s, chosen_m = select_stages(method, h, float(ode.rho_D(y)), float(ode.rho_A(y)))
	s = chosen_s if s is None else int(s)
	m = chosen_m if m is None else int(m)

	if method.is_chebyshev and s < 2:
		raise ValueError(f"{method.value!r} needs at least 2 stages, not {s}")
	if method in {MethodId.NPRKC, MethodId.RK4M} and m < 1:
		raise ValueError(f"{method.value!r} needs at least 1 advection block, not {m}")

	n_steps = max(1, math.ceil((ode.T - ode.t0) / h * (1 - 1e-12)))
	stats = StepStats()
	trace: List[StepRecord] = []
	t = ode.t0

	for index in range(n_steps):
		h_step = ode.T - t if index == n_steps - 1 else h
		recorded_m = m if method in {MethodId.NPRKC, MethodId.RK4M} else 0
		nfd, nfa = table1_cost(method, s, m)

		try:
			y = _fixed_step(method, ode, y, h_step, s, m, eta)
		except NonFiniteStateError as e:
			raise e.at_step(index) from None

		stats.count(nfd, nfa)
		stats.n_accept += 1
		trace.append(StepRecord(t, h_step, s, recorded_m, math.nan, True, nfd, nfa))
		t = ode.T if index == n_steps - 1 else ode.t0 + (index + 1) * h

	logger.debug("Fixed step %s: %d steps of h=%r", method.value, n_steps, h)
	return IntegrationResult(y=y, stats=stats, trace=trace, t=t)
