#!/usr/bin/env python3
#
#  linear.py
"""
Small dense linear split problems with exact solutions.
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

# 3rd party
import numpy

# this package
from stabrkc.ode import SplitOde

__all__ = ["DEFAULT_D_MATRIX", "DEFAULT_A_MATRIX", "linear_split"]

#: A symmetric negative definite diffusion-like matrix.
DEFAULT_D_MATRIX = numpy.array([[-1.0, 0.3], [0.3, -0.6]])

#: A rotation-dominated advection-like matrix.
DEFAULT_A_MATRIX = numpy.array([[0.1, 0.5], [-0.7, 0.0]])


def linear_split(
		D_matrix: Optional[numpy.ndarray] = None,
		A_matrix: Optional[numpy.ndarray] = None,
		y0: Optional[numpy.ndarray] = None,
		T: float = 1.0,
		) -> SplitOde:
	"""
	The linear problem :math:`y' = L y + M y` with :math:`f_D = L y` and :math:`f_A = M y`.

	The exact solution is computed from the eigendecomposition of :math:`L + M`.

	:param D_matrix: :math:`L`, defaults to :data:`~.DEFAULT_D_MATRIX`.
	:param A_matrix: :math:`M`, defaults to :data:`~.DEFAULT_A_MATRIX`.
	:param y0: Defaults to a vector of ones.
	:param T: The final time.
	"""

	L = DEFAULT_D_MATRIX if D_matrix is None else numpy.asarray(D_matrix, dtype=float)
	M = DEFAULT_A_MATRIX if A_matrix is None else numpy.asarray(A_matrix, dtype=float)

	if L.shape != M.shape or L.ndim != 2 or L.shape[0] != L.shape[1]:
		raise ValueError(f"Expected two square matrices of the same shape, got {L.shape} and {M.shape}")

	y0 = numpy.ones(L.shape[0]) if y0 is None else numpy.asarray(y0, dtype=float)

	eigenvalues, vectors = numpy.linalg.eig(L + M)
	coefficients = numpy.linalg.solve(vectors, y0.astype(complex))

	def exact(t: float) -> numpy.ndarray:
		return (vectors @ (numpy.exp(eigenvalues * t) * coefficients)).real

	rho_D = float(numpy.abs(numpy.linalg.eigvals(L)).max())
	rho_A = float(numpy.abs(numpy.linalg.eigvals(M)).max())

	return SplitOde(
			f_D=lambda y: L @ y,
			f_A=lambda y: M @ y,
			y0=y0,
			T=T,
			rho_D=lambda y: rho_D,
			rho_A=lambda y: rho_A,
			name="linear",
			exact=exact,
			)
