#!/usr/bin/env python3
#
#  damped_wave.py
"""
The two dimensional damped wave equation with variable viscous damping.

.. math::

	w_{tt} + B w_t = A_1 w_{xx} + A_2 w_{yy} + D_1 w_{txx} + D_2 w_{tyy} + S

is written as a first order system in :math:`(w, \\hat{w} = w_t)`.
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
from typing import Callable, Optional, Union

# 3rd party
import numpy

# this package
from stabrkc.enums import Boundary
from stabrkc.ode import SplitOde
from stabrkc.problems.grid import Grid

__all__ = ["damped_wave_2d", "wave_eigenvalues", "example1_damping", "example1_source"]

Field = Union[float, Callable[[numpy.ndarray, numpy.ndarray], numpy.ndarray]]


def example1_damping(x: numpy.ndarray, y: numpy.ndarray) -> numpy.ndarray:
	"""
	A Gaussian bump of viscous damping centred at :math:`(1/4, 1/4)`.
	"""

	return 0.1 * numpy.exp(-100 * ((x - 0.25)**2 + (y - 0.25)**2))


def example1_source(x: numpy.ndarray, y: numpy.ndarray) -> numpy.ndarray:
	"""
	Two Gaussian sources on the edge :math:`y = 1`.
	"""

	return (
			100 * numpy.exp(-500 * ((x - 0.75)**2 + (y - 1)**2))
			+ 100 * numpy.exp(-500 * ((x - 0.25)**2 + (y - 1)**2))
			)


def _sample(field: Optional[Field], x: numpy.ndarray, y: numpy.ndarray) -> numpy.ndarray:
	if field is None:
		return numpy.zeros_like(x)
	if callable(field):
		return numpy.broadcast_to(numpy.asarray(field(x, y), dtype=float), x.shape).copy()
	return numpy.full_like(x, float(field))


def damped_wave_2d(
		N: int,
		B: float = 0.0,
		A1: float = 0.05,
		A2: float = 15.0,
		D: Field = example1_damping,
		S: Optional[Field] = example1_source,
		boundary: Union[Boundary, str] = Boundary.ZERO_FLUX,
		*,
		D2: Optional[Field] = None,
		T: float = 0.75,
		) -> SplitOde:
	"""
	Semi-discretise the damped wave equation on an ``N`` by ``N`` grid.

	The state is :math:`(w, \\hat{w})`, each flattened, so the dimension is :math:`2N^2`.
	:math:`f_D` is the viscous damping :math:`D_1 \\hat{w}_{xx} + D_2 \\hat{w}_{yy}` and
	:math:`f_A` the rest. The initial data is zero.

	:param N:
	:param B: Linear damping.
	:param A1: Wave speed squared along ``x``.
	:param A2: Wave speed squared along ``y``.
	:param D: :math:`D_1`, a constant or a function of ``(x, y)``.
	:param S: The source, a constant or a function of ``(x, y)``.
	:param boundary:
	:param D2: :math:`D_2`. Defaults to ``D``.
	:param T: The final time.
	"""

	grid = Grid(2, N, boundary)
	x, y = grid.coordinates()
	d1 = _sample(D, x, y)
	d2 = d1 if D2 is None else _sample(D2, x, y)
	source = _sample(S, x, y)
	size = grid.size

	def split(state: numpy.ndarray):
		return state[:size].reshape(grid.shape), state[size:].reshape(grid.shape)

	def f_D(state: numpy.ndarray) -> numpy.ndarray:
		_, velocity = split(state)
		damping = d1 * grid.second_difference(velocity, 0) + d2 * grid.second_difference(velocity, 1)
		return numpy.concatenate([numpy.zeros(size), damping.ravel()])

	def f_A(state: numpy.ndarray) -> numpy.ndarray:
		w, velocity = split(state)
		acceleration = (
				-B * velocity + A1 * grid.second_difference(w, 0) + A2 * grid.second_difference(w, 1) + source
				)
		return numpy.concatenate([velocity.ravel(), acceleration.ravel()])

	Q = float(max(d1.max(), d2.max()))
	rho_D = 8 * N**2 * Q + B
	rho_A = 2 * N * numpy.sqrt(A1 + A2)

	return SplitOde(
			f_D=f_D,
			f_A=f_A,
			y0=numpy.zeros(2 * size),
			T=T,
			rho_D=lambda state: rho_D,
			rho_A=lambda state: rho_A,
			name="wave2d",
			)


def wave_eigenvalues(N: int, B: float, A1: float, A2: float, D1: float, D2: float) -> numpy.ndarray:
	"""
	The eigenvalues of the periodic constant coefficient damped wave system.

	For each mode :math:`(j_1, j_2)` the two eigenvalues are the roots of
	:math:`\\lambda^2 + (\\alpha_D + B)\\lambda + \\alpha_A = 0`.

	:param N:
	:param B:
	:param A1:
	:param A2:
	:param D1:
	:param D2:
	"""

	if N < 3:
		raise ValueError(f"N must be at least 3, not {N}")

	sin2 = numpy.sin(numpy.pi * numpy.arange(1, N + 1) / N)**2
	sx, sy = numpy.meshgrid(sin2, sin2, indexing="ij")
	alpha_A = 4 * N**2 * (A1 * sx + A2 * sy)
	alpha_D = 4 * N**2 * (D1 * sx + D2 * sy)

	damping = (alpha_D + B).ravel()
	root = numpy.sqrt((damping**2 - 4 * alpha_A.ravel()).astype(complex))

	return numpy.concatenate([(-damping + root) / 2, (-damping - root) / 2])
