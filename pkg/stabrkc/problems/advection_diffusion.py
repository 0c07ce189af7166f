#!/usr/bin/env python3
#
#  advection_diffusion.py
"""
The periodic linear advection-diffusion equation :math:`w_t + A w_x = D w_{xx}` on :math:`[0, 1]`.
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
from typing import Callable, Optional

# 3rd party
import numpy

# this package
from stabrkc.enums import Boundary
from stabrkc.ode import SplitOde
from stabrkc.problems.grid import Grid

__all__ = ["advection_diffusion_1d", "ad_eigenvalues", "ad_exact"]


def ad_eigenvalues(N: int, A: float, D: float) -> numpy.ndarray:
	"""
	The eigenvalues of the semi-discrete advection-diffusion operator, for :math:`k = 1 \\ldots N`.

	:param N:
	:param A: Advection speed.
	:param D: Diffusion coefficient.
	"""

	if N < 3:
		raise ValueError(f"N must be at least 3, not {N}")

	theta = 2 * numpy.pi * numpy.arange(1, N + 1) / N
	return 2 * D * N**2 * (numpy.cos(theta) - 1) - 1j * A * N * numpy.sin(theta)


def ad_exact(N: int, A: float, D: float, y0: numpy.ndarray, t0: float = 0.0) -> Callable[[float], numpy.ndarray]:
	"""
	Returns the exact solution of the semi-discrete system as a function of time.

	The operator is circulant, so it is diagonalised by the discrete Fourier transform.

	:param N:
	:param A:
	:param D:
	:param y0: The state at ``t0``.
	:param t0:
	"""

	# numpy.fft orders modes k = 0 ... N-1, and mode k is an eigenvector with the eigenvalue for k.
	theta = 2 * numpy.pi * numpy.arange(N) / N
	eigenvalues = 2 * D * N**2 * (numpy.cos(theta) - 1) - 1j * A * N * numpy.sin(theta)
	coefficients = numpy.fft.fft(numpy.asarray(y0, dtype=float))

	def exact(t: float) -> numpy.ndarray:
		return numpy.fft.ifft(coefficients * numpy.exp(eigenvalues * (t - t0))).real

	return exact


def advection_diffusion_1d(
		N: int,
		A: float,
		D: float,
		T: float = 0.1,
		y0: Optional[numpy.ndarray] = None,
		) -> SplitOde:
	"""
	Central difference semi-discretisation of the periodic advection-diffusion equation.

	:math:`f_D` is the diffusion term and :math:`f_A` the advection term.
	The spectral radii are :math:`4|D|N^2` and :math:`|A|N`.

	:param N: The number of grid points.
	:param A: Advection speed.
	:param D: Diffusion coefficient.
	:param T: The final time.
	:param y0: The initial state. Defaults to :math:`\\sin(2 \\pi x)`.
	"""

	grid = Grid(1, N, Boundary.PERIODIC)

	if y0 is None:
		y0 = numpy.sin(2 * numpy.pi * grid.coordinates())

	def f_D(y: numpy.ndarray) -> numpy.ndarray:
		return D * grid.second_difference(y)

	def f_A(y: numpy.ndarray) -> numpy.ndarray:
		return -A * grid.central_difference(y)

	rho_D = 4 * abs(D) * N**2
	rho_A = abs(A) * N

	return SplitOde(
			f_D=f_D,
			f_A=f_A,
			y0=y0,
			T=T,
			rho_D=lambda y: rho_D,
			rho_A=lambda y: rho_A,
			name="ad1d",
			exact=ad_exact(N, A, D, y0),
			)
