#!/usr/bin/env python3
#
#  brusselator.py
"""
The periodic two dimensional Brusselator with advection.
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

__all__ = ["brusselator_2d", "reaction"]


def reaction(w: numpy.ndarray, w_hat: numpy.ndarray):
	"""
	The reaction terms :math:`(w^2 \\hat{w} - 2w + 1.3, w - w^2 \\hat{w})`.

	:param w:
	:param w_hat:
	"""

	autocatalysis = w**2 * w_hat
	return autocatalysis - 2 * w + 1.3, w - autocatalysis


def brusselator_2d(
		N: int,
		A: float,
		D: float,
		T: float = 1.0,
		*,
		analytic_radius: bool = False,
		) -> SplitOde:
	"""
	Semi-discretise the Brusselator on a periodic ``N`` by ``N`` grid.

	:math:`f_D` is the diffusion :math:`D \\Delta` of both species;
	:math:`f_A` holds the advection :math:`A(-0.5 w_x + w_y)`, :math:`A(0.4 \\hat{w}_x + 0.7 \\hat{w}_y)`
	and the reaction.

	:param N:
	:param A: Advection strength.
	:param D: Diffusion coefficient.
	:param T: The final time.
	:param analytic_radius: Bound :math:`\\rho_A` analytically instead of by power iteration.
	"""

	grid = Grid(2, N, Boundary.PERIODIC)
	x, y = grid.coordinates()
	size = grid.size

	w0 = 22 * y * (1 - y)**1.5
	w_hat0 = 22 * x * (1 - x)**1.5

	def split(state: numpy.ndarray):
		return state[:size].reshape(grid.shape), state[size:].reshape(grid.shape)

	def f_D(state: numpy.ndarray) -> numpy.ndarray:
		w, w_hat = split(state)
		return D * numpy.concatenate([grid.laplacian(w).ravel(), grid.laplacian(w_hat).ravel()])

	def f_A(state: numpy.ndarray) -> numpy.ndarray:
		w, w_hat = split(state)
		react_w, react_w_hat = reaction(w, w_hat)
		dw = A * (-0.5 * grid.central_difference(w, 0) + grid.central_difference(w, 1)) + react_w
		dw_hat = A * (0.4 * grid.central_difference(w_hat, 0) + 0.7 * grid.central_difference(w_hat, 1)) + react_w_hat
		return numpy.concatenate([dw.ravel(), dw_hat.ravel()])

	rho_D = 8 * abs(D) * N**2

	if analytic_radius:

		def rho_A(state: numpy.ndarray) -> float:
			w, w_hat = split(state)
			product = 2 * w * w_hat
			row_sums = numpy.maximum(numpy.abs(product - 2) + w**2, numpy.abs(1 - product) + w**2)
			return 1.5 * abs(A) * N + float(row_sums.max())

		refresh = 1
	else:
		rho_A = PowerIterationRadius(f_A)
		refresh = 25

	return SplitOde(
			f_D=f_D,
			f_A=f_A,
			y0=numpy.concatenate([w0.ravel(), w_hat0.ravel()]),
			T=T,
			rho_D=lambda state: rho_D,
			rho_A=rho_A,
			rho_A_refresh=refresh,
			name="brusselator2d",
			)
