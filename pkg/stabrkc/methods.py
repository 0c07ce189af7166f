#!/usr/bin/env python3
#
#  methods.py
"""
One-step methods of the Runge-Kutta-Chebyshev family.

.. autosummary::

	~stabrkc.methods.rkc_step
	~stabrkc.methods.prkc_step
	~stabrkc.methods.arkc_step
	~stabrkc.methods.nprkc_step
	~stabrkc.methods.rk4m_step
	~stabrkc.methods.prkc_rk3_step
	~stabrkc.methods.midpoint_step
	~stabrkc.methods.table1_cost

All steppers are pure functions of their arguments.
Each returns (or, for the pure Runge-Kutta methods, implies) the number of
evaluations of :math:`f_D` and :math:`f_A` it made;
accumulating them in a :class:`~stabrkc.ode.StepStats` is the caller's job.
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
from typing import Dict, Iterable, Optional, Tuple, Union

# 3rd party
import attr
import numpy
from attr_utils.docstrings import add_attrs_doc

# this package
from stabrkc.chebyshev import ChebCoeffs, PRKCAlphas
from stabrkc.enums import MethodId
from stabrkc.errors import NonFiniteStateError
from stabrkc.ode import Evaluator, SplitOde, StepStats
from stabrkc.utils import is_finite

__all__ = [
		"StageData",
		"StepOutput",
		"rkc_step",
		"prkc_step",
		"arkc_step",
		"nprkc_step",
		"rk4m_step",
		"prkc_rk3_step",
		"midpoint_step",
		"table1_cost",
		]


@add_attrs_doc
@attr.s(slots=True, frozen=True, eq=False)
class StageData:
	"""
	Internal quantities of a step that the error estimators need.

	Only the fields a given method produces are set.
	"""

	#: The first stage of the Chebyshev block.
	k0: Optional[numpy.ndarray] = attr.ib(default=None)

	#: The stage :math:`K_{s_1}`, :math:`s_1 = \lfloor 4s/5 \rfloor`.
	k_s1: Optional[numpy.ndarray] = attr.ib(default=None)

	#: The last stage of the Chebyshev block.
	k_s: Optional[numpy.ndarray] = attr.ib(default=None)

	#: :math:`F_D(K_0)`
	f_d_k0: Optional[numpy.ndarray] = attr.ib(default=None)

	f_a_pairs: Tuple[Tuple[numpy.ndarray, numpy.ndarray], ...] = attr.ib(default=())
	"""
	:math:`(F_A(K_{s+3i-3}), F_A(K_{s+3i-2}))` for each of the ``m`` advection blocks.
	"""

	#: The full right-hand side at :math:`y_n`, for single-evaluator methods.
	f_yn: Optional[numpy.ndarray] = attr.ib(default=None)

	#: :math:`f_D(y_n)`, when the method evaluated it.
	f_d_yn: Optional[numpy.ndarray] = attr.ib(default=None)

	#: :math:`f_A(y_n)`, when the method evaluated it.
	f_a_yn: Optional[numpy.ndarray] = attr.ib(default=None)


@add_attrs_doc
@attr.s(slots=True, frozen=True, eq=False)
class StepOutput:
	"""
	The result of one step.
	"""

	#: The new state.
	y_next: numpy.ndarray = attr.ib()

	#: The number of evaluations of the diffusion part (or of ``f`` for :func:`~.rkc_step`).
	nfd: int = attr.ib()

	#: The number of evaluations of the advection part.
	nfa: int = attr.ib()

	#: The stages retained for error estimation.
	stages: StageData = attr.ib(factory=StageData)


def _check(value: numpy.ndarray, stage: str, counts: StepStats) -> numpy.ndarray:
	if not is_finite(value):
		raise NonFiniteStateError(stage, nfd=counts.nfd, nfa=counts.nfa)
	return value


def _chebyshev_block(
		f: Evaluator,
		k0: numpy.ndarray,
		f0: numpy.ndarray,
		h: float,
		coeffs: ChebCoeffs,
		counts: StepStats,
		*,
		offset: Optional[numpy.ndarray] = None,
		kick: Optional[numpy.ndarray] = None,
		keep: Iterable[int] = (),
		) -> Tuple[numpy.ndarray, numpy.ndarray, Dict[int, numpy.ndarray]]:
	"""
	Run stages 1 to ``s`` of the Chebyshev recurrence from ``k0``.

	The recurrence is carried in increments :math:`d_j = K_j - K_0`.
	``f0`` is the evaluation multiplying :math:`\\tilde{u}_1` and :math:`\\tilde{\\gamma}_j`;
	``offset`` is added to every later evaluation and ``kick`` to :math:`d_1`.
	Makes ``s - 1`` evaluations of ``f``.

	:returns: :math:`K_s`, :math:`K_{s-1}` and the stages listed in ``keep``.
	"""

	s = coeffs.s
	keep = set(keep)
	kept: Dict[int, numpy.ndarray] = {}

	d_prev2 = numpy.zeros_like(k0)
	d_prev = h * coeffs.u_tilde[1] * f0
	if kick is not None:
		d_prev = d_prev + kick

	k_prev = k0
	for j in range(2, s + 1):
		k_prev = _check(k0 + d_prev, f"K_{j - 1}", counts)
		if j - 1 in keep:
			kept[j - 1] = k_prev

		f_prev = f(k_prev)
		counts.count(nfd=1)
		if offset is not None:
			f_prev = f_prev + offset

		d_j = (
				coeffs.u[j] * d_prev + coeffs.v[j] * d_prev2
				+ h * (coeffs.u_tilde[j] * f_prev + coeffs.gamma_tilde[j] * f0)
				)
		d_prev2, d_prev = d_prev, d_j

	k_s = _check(k0 + d_prev, f"K_{s}", counts)
	if s in keep:
		kept[s] = k_s

	return k_s, k_prev, kept


def rkc_step(f: Evaluator, y_n: numpy.ndarray, h: float, coeffs: ChebCoeffs) -> StepOutput:
	"""
	One step of the ``s``-stage RKC method applied to :math:`y' = f(y)`.

	Makes ``s`` evaluations of ``f``, reported as :attr:`StepOutput.nfd`.

	:param f:
	:param y_n: The current state.
	:param h: The step size.
	:param coeffs: From :func:`~stabrkc.chebyshev.rkc_coeffs`.

	:raises: :exc:`~stabrkc.errors.NonFiniteStateError` if a stage is not finite.
	"""

	counts = StepStats()
	y_n = _check(numpy.asarray(y_n), "K_0", counts)

	f0 = f(y_n)
	counts.count(nfd=1)
	k_s, _, kept = _chebyshev_block(f, y_n, f0, h, coeffs, counts, keep=(coeffs.s1, ))

	stages = StageData(k0=y_n, k_s1=kept.get(coeffs.s1), k_s=k_s, f_d_k0=f0, f_yn=f0)
	return StepOutput(y_next=k_s, nfd=counts.nfd, nfa=counts.nfa, stages=stages)


def prkc_step(
		ode: SplitOde,
		y_n: numpy.ndarray,
		h: float,
		coeffs: ChebCoeffs,
		alphas: PRKCAlphas,
		) -> StepOutput:
	"""
	One step of the ``s+2``-stage PRKC method.

	The last two stages share the same Chebyshev combination, so :math:`f_D` is evaluated ``s`` times
	and :math:`f_A` four times.

	:param ode:
	:param y_n: The current state.
	:param h: The step size.
	:param coeffs: From :func:`~stabrkc.chebyshev.rkc_coeffs`.
	:param alphas: From :func:`~stabrkc.chebyshev.prkc_alphas`, with :math:`c_{s-1}` taken from ``coeffs``.
	"""

	counts = StepStats()
	y_n = _check(numpy.asarray(y_n), "K_-1", counts)
	a0, a1, a2, a3, a4, a5, a6, a7 = alphas

	fa_yn = ode.f_A(y_n)
	counts.count(nfa=1)
	k0 = _check(y_n + a0 * h * fa_yn, "K_0", counts)

	fd_k0 = ode.f_D(k0)
	counts.count(nfd=1)
	chebyshev_s, k_sm1, _ = _chebyshev_block(ode.f_D, k0, fd_k0, h, coeffs, counts)

	fa_k0 = ode.f_A(k0)
	fa_ksm1 = ode.f_A(k_sm1)
	counts.count(nfa=2)

	k_s = _check(chebyshev_s + h * (a1 * fa_yn + a2 * fa_k0 + a3 * fa_ksm1), f"K_{coeffs.s}", counts)

	fa_ks = ode.f_A(k_s)
	counts.count(nfa=1)

	y_next = chebyshev_s + h * (a4 * fa_yn + a5 * fa_k0 + a6 * fa_ksm1 + a7 * fa_ks)
	_check(y_next, f"K_{coeffs.s + 1}", counts)

	stages = StageData(k0=k0, k_s=k_s, f_d_k0=fd_k0, f_a_yn=fa_yn)
	return StepOutput(y_next=y_next, nfd=counts.nfd, nfa=counts.nfa, stages=stages)


def arkc_step(ode: SplitOde, y_n: numpy.ndarray, h: float, coeffs: ChebCoeffs) -> StepOutput:
	"""
	One step of the ``s``-stage ARKC method.

	Makes ``s + 2`` evaluations of :math:`f_D` and three of :math:`f_A`.

	:param ode:
	:param y_n: The current state.
	:param h: The step size.
	:param coeffs: From :func:`~stabrkc.chebyshev.rkc_coeffs`, usually with
		:func:`~stabrkc.chebyshev.arkc_eta` as the damping.
	"""

	counts = StepStats()
	y_n = _check(numpy.asarray(y_n), "y_n", counts)
	omega1 = coeffs.omega1

	fd_yn = ode.f_D(y_n)
	fa_yn = ode.f_A(y_n)
	counts.count(nfd=1, nfa=1)

	inner = ode.f_A(y_n + 0.5 * omega1 * h * fd_yn)
	outer = ode.f_A(y_n + 0.5 * h * inner + 0.5 * h * fd_yn)
	fd_shifted = ode.f_D(y_n + 0.5 * (omega1 - 1) * h * fa_yn)
	counts.count(nfd=1, nfa=2)

	g = h * outer + h * fd_shifted - h * fd_yn
	k0 = _check(y_n + 0.5 * omega1 * g, "K_0", counts)

	fd_k0 = ode.f_D(k0)
	counts.count(nfd=1)

	alpha_hat = (1 - 0.5 * omega1) * coeffs.b[1] * coeffs.s * omega1
	k_s, _, _ = _chebyshev_block(
			ode.f_D,
			k0,
			fd_yn,
			h,
			coeffs,
			counts,
			offset=fd_yn - fd_k0,
			kick=alpha_hat * g,
			)

	stages = StageData(k0=k0, k_s=k_s, f_d_k0=fd_k0, f_d_yn=fd_yn, f_a_yn=fa_yn)
	return StepOutput(y_next=k_s, nfd=counts.nfd, nfa=counts.nfa, stages=stages)


def nprkc_step(
		ode: SplitOde,
		y_n: numpy.ndarray,
		h: float,
		coeffs: ChebCoeffs,
		m: int = 1,
		) -> StepOutput:
	"""
	One step of the NPRKC method.

	``m`` forward Euler advection stages of size :math:`h/(2m)` are followed by the ``s``-stage
	Chebyshev block on :math:`f_D` and then ``m`` three-stage advection blocks.
	Makes ``s`` evaluations of :math:`f_D` and ``4m`` of :math:`f_A`.

	:param ode:
	:param y_n: The current state.
	:param h: The step size.
	:param coeffs: From :func:`~stabrkc.chebyshev.rkc_coeffs`.
	:param m: The number of advection blocks.
	"""

	if m < 1:
		raise ValueError(f"'m' must be at least 1, not {m}")

	counts = StepStats()
	k = _check(numpy.asarray(y_n), "y_n", counts)
	sub = h / (2 * m)

	for i in range(1, m + 1):
		fa = ode.f_A(k)
		counts.count(nfa=1)
		k = _check(k + sub * fa, f"K^_{i}", counts)

	k0 = k
	fd_k0 = ode.f_D(k0)
	counts.count(nfd=1)
	s1 = coeffs.s1
	k_s, _, kept = _chebyshev_block(ode.f_D, k0, fd_k0, h, coeffs, counts, keep=(s1, ))

	base = k_s
	pairs = []
	third = h / (6 * m)
	for i in range(1, m + 1):
		index = coeffs.s + 3 * i
		fa0 = ode.f_A(base)
		counts.count(nfa=1)
		k1 = _check(base + third * fa0, f"K_{index - 2}", counts)
		fa1 = ode.f_A(k1)
		counts.count(nfa=1)
		k2 = _check(base - third * fa1, f"K_{index - 1}", counts)
		fa2 = ode.f_A(k2)
		counts.count(nfa=1)

		base = _check(base + (2 / m) * h * fa0 - (1.5 / m) * h * fa2, f"K_{index}", counts)
		pairs.append((fa0, fa1))

	stages = StageData(k0=k0, k_s1=kept[s1], k_s=k_s, f_d_k0=fd_k0, f_a_pairs=tuple(pairs))
	return StepOutput(y_next=base, nfd=counts.nfd, nfa=counts.nfa, stages=stages)


def rk4m_step(f: Evaluator, y_n: numpy.ndarray, h: float, m: int = 1) -> numpy.ndarray:
	"""
	One step of the ``4m``-stage method NPRKC reduces to without diffusion.

	For ``m = 1`` this is a four-stage third order method. Makes ``4m`` evaluations of ``f``.

	:param f:
	:param y_n: The current state.
	:param h: The step size.
	:param m:
	"""

	if m < 1:
		raise ValueError(f"'m' must be at least 1, not {m}")

	counts = StepStats()
	y = _check(numpy.asarray(y_n), "H_1", counts)

	for _ in range(m):
		y = y + h / (2 * m) * f(y)
		counts.count(nfa=1)
	_check(y, "H_2", counts)

	for _ in range(m):
		f_base = f(y)
		h3 = y + h / (6 * m) * f_base
		h4 = y - h / (6 * m) * f(h3)
		f_h4 = f(h4)
		counts.count(nfa=3)
		y = _check(y + 2 * h / m * f_base - 1.5 * h / m * f_h4, "H_4", counts)

	return y


def prkc_rk3_step(f: Evaluator, y_n: numpy.ndarray, h: float, alphas: PRKCAlphas) -> numpy.ndarray:
	"""
	One step of the three-stage third order method PRKC reduces to without diffusion.

	:param f:
	:param y_n: The current state.
	:param h: The step size.
	:param alphas: From :func:`~stabrkc.chebyshev.prkc_alphas`.
	"""

	a0, a1, a2, a3, a4, a5, a6, a7 = alphas
	counts = StepStats()
	y_n = _check(numpy.asarray(y_n), "H_1", counts)

	f1 = f(y_n)
	counts.count(nfa=1)
	h2 = _check(y_n + a0 * h * f1, "H_2", counts)
	f2 = f(h2)
	counts.count(nfa=1)
	h3 = _check(y_n + (a0 + a1) * h * f1 + (a2 + a3) * h * f2, "H_3", counts)
	f3 = f(h3)
	counts.count(nfa=1)

	return _check(y_n + (a0 + a4) * h * f1 + (a5 + a6) * h * f2 + a7 * h * f3, "y_n+1", counts)


def midpoint_step(f: Evaluator, y_n: numpy.ndarray, h: float) -> numpy.ndarray:
	"""
	One step of the explicit midpoint method, :math:`y + h f(y + h f(y) / 2)`.

	:param f:
	:param y_n: The current state.
	:param h: The step size.
	"""

	counts = StepStats()
	y_n = _check(numpy.asarray(y_n), "y_n", counts)
	f_yn = f(y_n)
	counts.count(nfa=1)
	half = _check(y_n + 0.5 * h * f_yn, "y_n+1/2", counts)

	f_half = f(half)
	counts.count(nfa=1)
	return _check(y_n + h * f_half, "y_n+1", counts)


def table1_cost(method: Union[MethodId, str], s: int = 2, m: int = 1) -> Tuple[int, int]:
	"""
	The number of :math:`(f_D, f_A)` evaluations made by one step of ``method``.

	RKC and the pure Runge-Kutta methods evaluate the whole right-hand side,
	which costs one evaluation of each part.

	:param method:
	:param s: The number of Chebyshev stages.
	:param m: The number of NPRKC advection blocks.
	"""

	method = MethodId(method)

	if method is MethodId.RKC:
		return s, s
	elif method is MethodId.PRKC:
		return s, 4
	elif method is MethodId.ARKC:
		return s + 2, 3
	elif method is MethodId.NPRKC:
		return s, 4 * m
	elif method is MethodId.RK3:
		return 4, 4
	elif method is MethodId.RK4M:
		return 4 * m, 4 * m
	elif method is MethodId.PRK3:
		return 3, 3
	else:
		return 2, 2
