#!/usr/bin/env python3
#
#  radius.py
"""
Spectral radius estimates for nonlinear right-hand sides.
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
import math
from typing import Optional

# 3rd party
import attr
import numpy

# this package
from stabrkc.ode import Evaluator

__all__ = ["SAFETY_FACTOR", "power_iteration_radius", "PowerIterationRadius"]

#: Multiplier applied to power iteration estimates.
SAFETY_FACTOR: float = 1.05


def power_iteration_radius(
		f: Evaluator,
		y: numpy.ndarray,
		iters: int = 25,
		seed: int = 0,
		safety: float = SAFETY_FACTOR,
		) -> float:
	"""
	Estimate the spectral radius of the Jacobian of ``f`` at ``y`` by power iteration.

	Jacobian-vector products are approximated by forward differences.

	:param f:
	:param y: The state to linearise about.
	:param iters: The number of iterations, at least 5.
	:param seed: Seed for the random starting vector.
	:param safety: Multiplier applied to the estimate.

	:returns: A non-negative estimate, ``0`` when ``f`` is locally constant.
	"""

	if iters < 5:
		raise ValueError(f"At least 5 iterations are required, not {iters}")

	y = numpy.asarray(y, dtype=float)
	rng = numpy.random.default_rng(seed)
	f_y = f(y)
	y_norm = float(numpy.linalg.norm(y))

	def jvp(direction: numpy.ndarray) -> numpy.ndarray:
		eps = math.sqrt(numpy.finfo(float).eps) * max(1.0, y_norm)
		return (f(y + eps * direction) - f_y) / eps

	vector = rng.standard_normal(y.shape)
	vector /= numpy.linalg.norm(vector)
	estimate = 0.0

	for attempt in range(2):
		for _ in range(iters):
			image = jvp(vector)
			norm = float(numpy.linalg.norm(image))
			if norm == 0.0 or not math.isfinite(norm):
				estimate = 0.0
				break

			estimate = norm
			vector = image / norm
		else:
			break

		# Degenerate direction; try once more from a fresh vector.
		vector = rng.standard_normal(y.shape)
		vector /= numpy.linalg.norm(vector)

	return safety * estimate


@attr.s(slots=True)
class PowerIterationRadius:
	"""
	A :data:`~stabrkc.ode.RadiusProvider` using :func:`~.power_iteration_radius`.

	:param f:
	:param iters:
	:param seed:
	"""

	f: Evaluator = attr.ib()
	iters: int = attr.ib(default=25)
	seed: int = attr.ib(default=0)
	last: Optional[float] = attr.ib(default=None, init=False)

	def __call__(self, y: numpy.ndarray) -> float:
		self.last = power_iteration_radius(self.f, y, self.iters, self.seed)
		return self.last
