#!/usr/bin/env python3
#
#  __init__.py
"""
Partitioned Runge-Kutta-Chebyshev integrators for advection-diffusion-reaction problems.

.. autosummary::

	~stabrkc.chebyshev
	~stabrkc.methods
	~stabrkc.stability
	~stabrkc.adaptive
	~stabrkc.problems
	~stabrkc.reference
	~stabrkc.harness
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

# this package
from stabrkc.adaptive import AdaptiveConfig, integrate_adaptive, integrate_fixed
from stabrkc.chebyshev import ChebCoeffs, rkc_coeffs
from stabrkc.enums import Boundary, Estimator, MethodId
from stabrkc.errors import NonFiniteStateError, StabRKCError
from stabrkc.ode import SplitOde, StepStats

__author__: str = "Dominic Davis-Foster"
__copyright__: str = "2020-2024 Dominic Davis-Foster"
__license__: str = "MIT License"
__version__: str = "0.1.0"
__email__: str = "dominic@davis-foster.co.uk"

__all__ = [
		"AdaptiveConfig",
		"Boundary",
		"ChebCoeffs",
		"Estimator",
		"MethodId",
		"NonFiniteStateError",
		"SplitOde",
		"StabRKCError",
		"StepStats",
		"integrate_adaptive",
		"integrate_fixed",
		"rkc_coeffs",
		]
