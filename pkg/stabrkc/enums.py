#!/usr/bin/env python3
#
#  enums.py
"""
Enumerations used throughout the package.
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
from enum_tools import IntEnum, StrEnum
from enum_tools.documentation import document_enum

__all__ = ["MethodId", "Estimator", "Boundary", "OutputFormat", "Kind"]


@document_enum
class MethodId(StrEnum):
	"""
	Identifiers for the one-step methods.
	"""

	RKC = "rkc"  # doc: Runge-Kutta-Chebyshev applied to the combined right-hand side.
	PRKC = "prkc"  # doc: Partitioned RKC with a three-stage tail on the advection part.
	ARKC = "arkc"  # doc: Additive RKC with a midpoint correction for the advection part.
	NPRKC = "nprkc"  # doc: Partitioned RKC with 4m advection stages.
	RK3 = "rk3"  # doc: The four-stage third order method obtained from NPRKC with m = 1.
	PRK3 = "prk3"  # doc: The three-stage third order method underlying PRKC.
	MIDPOINT = "midpoint"  # doc: The explicit midpoint method underlying ARKC.
	RK4M = "rk4m"  # doc: The 4m-stage method obtained from NPRKC without diffusion.

	@property
	def is_partitioned(self) -> bool:
		"""
		Whether the method treats the diffusion and advection parts differently.
		"""

		return self in {MethodId.PRKC, MethodId.ARKC, MethodId.NPRKC}

	@property
	def is_chebyshev(self) -> bool:
		"""
		Whether the method has a Chebyshev stage block (and so takes ``s``).
		"""

		return self in {MethodId.RKC, MethodId.PRKC, MethodId.ARKC, MethodId.NPRKC}


@document_enum
class Estimator(IntEnum):
	"""
	The local error estimator used by the adaptive NPRKC integrator.
	"""

	VARIANT_1 = 1  # doc: Third order diffusion estimate, costing one extra diffusion evaluation.
	VARIANT_2 = 2  # doc: Embedded first order diffusion estimate, at no extra cost.

	@property
	def order(self) -> int:
		"""
		The exponent ``p`` used by the step size controller.
		"""

		return 3 if self is Estimator.VARIANT_1 else 2


@document_enum
class Boundary(StrEnum):
	"""
	Boundary conditions for the grids in :mod:`stabrkc.problems`.
	"""

	PERIODIC = "periodic"  # doc: Periodic wraparound.
	ZERO_FLUX = "zero-flux"  # doc: Homogeneous Neumann conditions, via mirrored ghost points.


@document_enum
class OutputFormat(StrEnum):
	"""
	File formats written by the command line interface.
	"""

	CSV = "csv"  # doc: Comma separated values.
	JSON = "json"  # doc: JSON with a ``schema`` version field.


@document_enum
class Kind(IntEnum):
	"""
	The kind of Chebyshev polynomial.
	"""

	FIRST = 1  # doc: :math:`T_j`
	SECOND = 2  # doc: :math:`U_j`
