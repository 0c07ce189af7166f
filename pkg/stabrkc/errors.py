#!/usr/bin/env python3
#
#  errors.py
"""
Exceptions raised by the integrators and the command line interface.
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
from typing import Optional

__all__ = [
		"StabRKCError",
		"NonFiniteStateError",
		"StepSizeUnderflowError",
		"IntegrationError",
		"ReferenceMissingError",
		]


class StabRKCError(Exception):
	"""
	Base class for exceptions raised by :mod:`stabrkc`.
	"""


class NonFiniteStateError(StabRKCError, ArithmeticError):
	"""
	Raised when a stage value contains ``nan`` or ``inf``.

	:param stage: Label of the offending stage, e.g. ``'K_7'``.
	:param nfd: The number of diffusion evaluations made before the step was abandoned.
	:param nfa: The number of advection evaluations made before the step was abandoned.
	:param step: The index of the step, if known.
	"""

	def __init__(self, stage: str, nfd: int = 0, nfa: int = 0, step: Optional[int] = None):
		self.stage = stage
		self.nfd = nfd
		self.nfa = nfa
		self.step = step
		super().__init__(self._message())

	def _message(self) -> str:
		msg = f"Non-finite value in stage {self.stage}"
		if self.step is not None:
			msg += f" of step {self.step}"
		return msg

	def at_step(self, step: int) -> "NonFiniteStateError":
		"""
		Returns a copy of the exception with the step index filled in.

		:param step:
		"""

		return NonFiniteStateError(self.stage, self.nfd, self.nfa, step=step)


class StepSizeUnderflowError(StabRKCError):
	"""
	Raised when the adaptive controller requests a step smaller than ``h_min``.

	:param t: The time at which the underflow occurred.
	:param h: The requested step size.
	"""

	def __init__(self, t: float, h: float):
		self.t = t
		self.h = h
		super().__init__(f"Step size underflow at t={t!r} (h={h!r})")


class IntegrationError(StabRKCError):
	"""
	Raised when an integration cannot make progress.
	"""


class ReferenceMissingError(StabRKCError, FileNotFoundError):
	"""
	Raised when a reference solution is not cached and computing it was disabled.
	"""
