#!/usr/bin/env python3
#
#  chebyshev.py
"""
Chebyshev polynomials and the coefficients of the Runge-Kutta-Chebyshev family.

.. autosummary::

	~stabrkc.chebyshev.cheb_eval
	~stabrkc.chebyshev.cheb_derivs
	~stabrkc.chebyshev.ChebCoeffs
	~stabrkc.chebyshev.rkc_coeffs
	~stabrkc.chebyshev.PRKCAlphas
	~stabrkc.chebyshev.prkc_alphas
	~stabrkc.chebyshev.arkc_eta
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
from typing import Any, NamedTuple, Tuple, Union

# 3rd party
import attr
import numpy
from attr_utils.docstrings import add_attrs_doc

# this package
from stabrkc.enums import Kind

__all__ = [
		"DEFAULT_ETA",
		"MAX_STAGES",
		"ARKC_ETA_ANCHORS",
		"cheb_eval",
		"cheb_derivs",
		"ChebCoeffs",
		"rkc_coeffs",
		"PRKCAlphas",
		"prkc_alphas",
		"arkc_eta",
		]

#: The damping parameter used by RKC, PRKC and NPRKC unless overridden.
DEFAULT_ETA: float = 2 / 13

#: The largest stage count the coefficient generator accepts.
MAX_STAGES: int = 512

#: ``(s, eta)`` pairs the ARKC damping schedule interpolates between.
ARKC_ETA_ANCHORS: Tuple[Tuple[int, float], ...] = ((5, 4.0), (15, 9.0), (50, 13.5))

Number = Union[float, complex, numpy.ndarray]


def cheb_eval(kind: Union[Kind, int], j: int, x: Number) -> Number:
	"""
	Evaluate the Chebyshev polynomial :math:`T_j(x)` or :math:`U_j(x)` by the three-term recurrence.

	``x`` may be a real or complex scalar, or an array, and may lie outside :math:`[-1, 1]`.

	:param kind: :attr:`Kind.FIRST <stabrkc.enums.Kind.FIRST>` for :math:`T_j`,
		:attr:`Kind.SECOND <stabrkc.enums.Kind.SECOND>` for :math:`U_j`.
	:param j: The degree.
	:param x:
	"""

	kind = Kind(kind)
	if j < 0:
		raise ValueError(f"The degree must be non-negative, not {j}")

	prev = x * 0 + 1.0
	if j == 0:
		return prev

	current = x * 1.0 if kind is Kind.FIRST else 2.0 * x
	for _ in range(j - 1):
		prev, current = current, 2.0 * x * current - prev

	return current


def cheb_derivs(j: int, x: Number) -> Tuple[Number, Number, Number]:
	"""
	Returns :math:`T_j(x)` and its first and second derivatives.

	:param j: The degree.
	:param x:
	"""

	if j < 0:
		raise ValueError(f"The degree must be non-negative, not {j}")

	t, dt, d2t = _cheb_table(j, x)
	return t[j], dt[j], d2t[j]


def _cheb_table(j: int, x: Any) -> Tuple[list, list, list]:
	# Values and derivatives for every degree up to j.
	t = [x * 0 + 1.0, x * 1.0]
	dt = [x * 0.0, x * 0 + 1.0]
	d2t = [x * 0.0, x * 0.0]

	for k in range(2, j + 1):
		t.append(2 * x * t[k - 1] - t[k - 2])
		dt.append(2 * t[k - 1] + 2 * x * dt[k - 1] - dt[k - 2])
		d2t.append(4 * dt[k - 1] + 2 * x * d2t[k - 1] - d2t[k - 2])

	return t[:j + 1], dt[:j + 1], d2t[:j + 1]


def _readonly(values: numpy.ndarray) -> numpy.ndarray:
	values = numpy.array(values, dtype=float)
	values.flags.writeable = False
	return values


@add_attrs_doc
@attr.s(frozen=True, slots=True, eq=False)
class ChebCoeffs:
	"""
	The recurrence coefficients of an ``s``-stage Runge-Kutta-Chebyshev method.

	Every array has length ``s + 1`` and is indexed by stage number;
	entries below the first stage a coefficient is defined for are zero.
	"""

	#: The number of stages.
	s: int = attr.ib()

	#: The damping parameter.
	eta: float = attr.ib()

	omega0: float = attr.ib()
	omega1: float = attr.ib()

	#: :math:`b_0 \ldots b_s`, with :math:`b_0 = b_1 = b_2`.
	b: numpy.ndarray = attr.ib(converter=_readonly)

	#: :math:`\tilde{u}_1 \ldots \tilde{u}_s`
	u_tilde: numpy.ndarray = attr.ib(converter=_readonly)

	#: :math:`u_2 \ldots u_s`
	u: numpy.ndarray = attr.ib(converter=_readonly)

	#: :math:`v_2 \ldots v_s`
	v: numpy.ndarray = attr.ib(converter=_readonly)

	#: :math:`\tilde{\gamma}_2 \ldots \tilde{\gamma}_s`
	gamma_tilde: numpy.ndarray = attr.ib(converter=_readonly)

	#: The stage abscissae :math:`c_0 \ldots c_s`.
	c: numpy.ndarray = attr.ib(converter=_readonly)

	#: :math:`a_j = 1 - b_j T_j(\omega_0)`
	a: numpy.ndarray = attr.ib(converter=_readonly)

	#: :math:`T_j(\omega_0)`
	t: numpy.ndarray = attr.ib(converter=_readonly)

	#: :math:`T_j'(\omega_0)`
	dt: numpy.ndarray = attr.ib(converter=_readonly)

	@property
	def s1(self) -> int:
		"""
		The stage used by the embedded first order diffusion estimate, :math:`\\lfloor 4s/5 \\rfloor`.
		"""

		return (4 * self.s) // 5


def rkc_coeffs(s: int, eta: float = DEFAULT_ETA) -> ChebCoeffs:
	"""
	Compute the coefficients of the ``s``-stage second order RKC method.

	Results are cached per ``(s, eta)``.

	:param s: The number of stages, between 2 and :data:`~.MAX_STAGES`.
	:param eta: The damping parameter, :math:`\\omega_0 = 1 + \\eta / s^2`.
	"""

	s = int(s)
	eta = float(eta)

	if s < 2:
		raise ValueError(f"RKC methods need at least 2 stages, not {s}")
	if s > MAX_STAGES:
		raise ValueError(f"At most {MAX_STAGES} stages are supported, not {s}")
	if not numpy.isfinite(eta) or eta < 0:
		raise ValueError(f"The damping parameter must be finite and non-negative, not {eta}")

	return _rkc_coeffs(s, eta)


@functools.lru_cache(maxsize=None)
def _rkc_coeffs(s: int, eta: float) -> ChebCoeffs:
	omega0 = 1.0 + eta / s**2
	t, dt, d2t = (numpy.array(col, dtype=float) for col in _cheb_table(s, omega0))
	omega1 = dt[s] / d2t[s]

	b = numpy.zeros(s + 1)
	b[2:] = d2t[2:] / dt[2:]**2
	b[0] = b[1] = b[2]
	a = 1.0 - b * t

	u_tilde = numpy.zeros(s + 1)
	u = numpy.zeros(s + 1)
	v = numpy.zeros(s + 1)
	gamma_tilde = numpy.zeros(s + 1)
	c = numpy.zeros(s + 1)

	u_tilde[1] = omega1 * b[1]
	c[1] = u_tilde[1]

	for j in range(2, s + 1):
		u_tilde[j] = 2 * omega1 * b[j] / b[j - 1]
		u[j] = 2 * omega0 * b[j] / b[j - 1]
		v[j] = -b[j] / b[j - 2]
		gamma_tilde[j] = -a[j - 1] * u_tilde[j]
		c[j] = u[j] * c[j - 1] + v[j] * c[j - 2] + u_tilde[j] + gamma_tilde[j]

	return ChebCoeffs(
			s=s,
			eta=eta,
			omega0=omega0,
			omega1=omega1,
			b=b,
			u_tilde=u_tilde,
			u=u,
			v=v,
			gamma_tilde=gamma_tilde,
			c=c,
			a=a,
			t=t,
			dt=dt,
			)


class PRKCAlphas(NamedTuple):
	"""
	The advection weights of the PRKC method.
	"""

	alpha0: float
	alpha1: float
	alpha2: float
	alpha3: float
	alpha4: float
	alpha5: float
	alpha6: float
	alpha7: float


def prkc_alphas(r: float = 1.0, alpha3: float = 0.0, c_s_minus_1: float = 0.5) -> PRKCAlphas:
	"""
	Compute the PRKC advection weights :math:`\\alpha_0 \\ldots \\alpha_7`.

	:param r: Free parameter; must not be ``0`` or ``1/2``.
	:param alpha3: Free parameter.
	:param c_s_minus_1: The abscissa :math:`c_{s-1}` of the Chebyshev block, see :attr:`ChebCoeffs.c`.
	"""

	if r == 0 or r == 0.5:
		raise ValueError(f"'r' must not be 0 or 1/2 (got {r})")
	if c_s_minus_1 == 0:
		raise ValueError("'c_s_minus_1' must be non-zero")

	c = c_s_minus_1
	denom = 6 * r * (2 * r - 1)

	return PRKCAlphas(
			alpha0=0.5,
			alpha1=-0.5 + r * (3 - 4 * r),
			alpha2=2 * r * (2 * r - 1) - alpha3,
			alpha3=alpha3,
			alpha4=(1 - 3 * r) / (6 * r),
			alpha5=(1 + 3 * r * (1 - 2 * r) + 4 * c * r * (3 * r - 2)) / (c * denom),
			alpha6=(3 * r * (2 * r - 1) - 1) / (c * denom),
			alpha7=1 / denom,
			)


def arkc_eta(s: int) -> float:
	"""
	The default ARKC damping parameter for ``s`` stages.

	Piecewise linear through :data:`~.ARKC_ETA_ANCHORS`, constant outside them.

	:param s:
	"""

	xs, ys = zip(*ARKC_ETA_ANCHORS)
	return float(numpy.interp(s, xs, ys))
