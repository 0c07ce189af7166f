#!/usr/bin/env python3
#
#  burgers.py
"""
Viscous Burgers equations with periodic boundaries, in one and two dimensions.

Advection is discretised in the non-conservative form :math:`A w_j (w_{j+1} - w_{j-1}) / (2 h_x)`.
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

# 3rd party
import numpy

# this package
from stabrkc.enums import Boundary
from stabrkc.ode import SplitOde
from stabrkc.problems.grid import Grid
from stabrkc.problems.radius import PowerIterationRadius

__all__ = ["burgers_1d", "burgers_2d"]


def burgers_1d(N: int, A: float, D: float, T: float = 0.5, *, analytic_radius: bool = False) -> SplitOde:
	"""
	:math:`w_t = D w_{xx} + A w w_x` with :math:`w(x, 0) = 1 + \\cos(2 \\pi x)`.

	:param N:
	:param A:
	:param D:
	:param T: The final time.
	:param analytic_radius: Bound :math:`\\rho_A` by :math:`1.5 |A| N \\max |w|` instead of power iteration.
	"""

	grid = Grid(1, N, Boundary.PERIODIC)
	x = grid.coordinates()

	def f_D(w: numpy.ndarray) -> numpy.ndarray:
		return D * grid.second_difference(w)

	def f_A(w: numpy.ndarray) -> numpy.ndarray:
		return A * w * grid.central_difference(w)

	if analytic_radius:
		rho_A, refresh = (lambda w: 1.5 * abs(A) * N * float(numpy.abs(w).max())), 1
	else:
		rho_A, refresh = PowerIterationRadius(f_A), 25

	rho_D = 4 * abs(D) * N**2

	return SplitOde(
			f_D=f_D,
			f_A=f_A,
			y0=1 + numpy.cos(2 * numpy.pi * x),
			T=T,
			rho_D=lambda w: rho_D,
			rho_A=rho_A,
			rho_A_refresh=refresh,
			name="burgers1d",
			)


def burgers_2d(N: int, A: float, D: float, T: float = 0.5, *, analytic_radius: bool = False) -> SplitOde:
	"""
	The coupled two dimensional Burgers system in :math:`(w, \\hat{w})`.

	.. math::

		w_t = D \\Delta w + A (w w_x + \\hat{w} w_y) \\\\
		\\hat{w}_t = D \\Delta \\hat{w} + A (w \\hat{w}_x + \\hat{w} \\hat{w}_y)

	:param N:
	:param A:
	:param D:
	:param T: The final time.
	:param analytic_radius: Bound :math:`\\rho_A` by :math:`3 |A| N \\max |y|` instead of power iteration.
	"""

	grid = Grid(2, N, Boundary.PERIODIC)
	x, y = grid.coordinates()
	size = grid.size

	w0 = 1 + numpy.cos(2 * numpy.pi * x) * numpy.cos(2 * numpy.pi * y)
	w_hat0 = 1 + numpy.sin(2 * numpy.pi * x) * numpy.sin(2 * numpy.pi * y)

	def split(state: numpy.ndarray):
		return state[:size].reshape(grid.shape), state[size:].reshape(grid.shape)

	def f_D(state: numpy.ndarray) -> numpy.ndarray:
		w, w_hat = split(state)
		return D * numpy.concatenate([grid.laplacian(w).ravel(), grid.laplacian(w_hat).ravel()])

	def f_A(state: numpy.ndarray) -> numpy.ndarray:
		w, w_hat = split(state)
		dw = w * grid.central_difference(w, 0) + w_hat * grid.central_difference(w, 1)
		dw_hat = w * grid.central_difference(w_hat, 0) + w_hat * grid.central_difference(w_hat, 1)
		return A * numpy.concatenate([dw.ravel(), dw_hat.ravel()])

	if analytic_radius:
		rho_A, refresh = (lambda state: 3 * abs(A) * N * float(numpy.abs(state).max())), 1
	else:
		rho_A, refresh = PowerIterationRadius(f_A), 25

	rho_D = 8 * abs(D) * N**2

	return SplitOde(
			f_D=f_D,
			f_A=f_A,
			y0=numpy.concatenate([w0.ravel(), w_hat0.ravel()]),
			T=T,
			rho_D=lambda state: rho_D,
			rho_A=rho_A,
			rho_A_refresh=refresh,
			name="burgers2d",
			)
