#!/usr/bin/env python3
#
#  ode.py
"""
The split right-hand side container and the evaluation counters.
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
from typing import Callable, Optional

# 3rd party
import attr
import numpy
from attr_utils.docstrings import add_attrs_doc
from attr_utils.serialise import serde

__all__ = ["Evaluator", "RadiusProvider", "zero_radius", "SplitOde", "StepStats"]

#: A right-hand side, mapping a state to its time derivative.
Evaluator = Callable[[numpy.ndarray], numpy.ndarray]

#: Maps a state to a spectral radius estimate of a Jacobian.
RadiusProvider = Callable[[numpy.ndarray], float]


def zero_radius(y: numpy.ndarray) -> float:  # noqa: D103
	return 0.0


def _zero_field(y: numpy.ndarray) -> numpy.ndarray:
	return numpy.zeros_like(y)


def _check_time_span(instance: "SplitOde", attribute: attr.Attribute, value: float):
	if not value > instance.t0:
		raise ValueError(f"The final time T={value!r} must be after t0={instance.t0!r}")


def _check_refresh(instance: "SplitOde", attribute: attr.Attribute, value: int):
	if value < 1:
		raise ValueError(f"'{attribute.name}' must be at least 1")


@add_attrs_doc
@attr.s(slots=True, eq=False)
class SplitOde:
	r"""
	An autonomous system :math:`y' = f_D(y) + f_A(y)` with a moderately stiff part :math:`f_D`
	and a non-stiff part :math:`f_A`.

	Non-autonomous problems are handled by appending time to the state.
	"""  # noqa: D400

	#: The diffusion (moderately stiff) part.
	f_D: Evaluator = attr.ib(default=_zero_field)

	#: The advection/reaction (non-stiff) part.
	f_A: Evaluator = attr.ib(default=_zero_field)

	#: The initial state.
	y0: numpy.ndarray = attr.ib(factory=functools.partial(numpy.zeros, 1), converter=numpy.asarray)

	#: The initial time.
	t0: float = attr.ib(default=0.0, converter=float)

	#: The final time.
	T: float = attr.ib(default=1.0, converter=float, validator=_check_time_span)

	#: Spectral radius estimate of the Jacobian of :attr:`f_D`.
	rho_D: RadiusProvider = attr.ib(default=zero_radius)

	#: Spectral radius estimate of the Jacobian of :attr:`f_A`.
	rho_A: RadiusProvider = attr.ib(default=zero_radius)

	#: Number of accepted steps between evaluations of :attr:`rho_D`.
	rho_D_refresh: int = attr.ib(default=1, validator=_check_refresh)

	#: Number of accepted steps between evaluations of :attr:`rho_A`.
	rho_A_refresh: int = attr.ib(default=1, validator=_check_refresh)

	#: A short identifier, used in logs and cache keys.
	name: str = attr.ib(default='')

	exact: Optional[Callable[[float], numpy.ndarray]] = attr.ib(default=None)
	"""
	The exact solution of the system at a given time, if known.
	"""

	@property
	def dim(self) -> int:
		"""
		The dimension of the state.
		"""

		return int(self.y0.size)

	def f(self, y: numpy.ndarray) -> numpy.ndarray:
		"""
		The combined right-hand side :math:`f_D(y) + f_A(y)`.

		:param y:
		"""

		return self.f_D(y) + self.f_A(y)


@serde
@add_attrs_doc
@attr.s(slots=True)
class StepStats:
	"""
	Step and function evaluation counters for one integration.
	"""

	#: The number of accepted steps.
	n_accept: int = attr.ib(default=0)

	#: The number of rejected steps.
	n_reject: int = attr.ib(default=0)

	#: The number of evaluations of :math:`f_D`.
	nfd: int = attr.ib(default=0)

	#: The number of evaluations of :math:`f_A`.
	nfa: int = attr.ib(default=0)

	@property
	def nfe(self) -> int:
		"""
		The total number of function evaluations.
		"""

		return self.nfd + self.nfa

	def count(self, nfd: int = 0, nfa: int = 0) -> None:
		"""
		Add to the evaluation counters.

		:param nfd:
		:param nfa:
		"""

		self.nfd += int(nfd)
		self.nfa += int(nfa)
