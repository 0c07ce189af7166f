#!/usr/bin/env python3
#
#  grid.py
"""
Uniform grids on the unit interval and unit square, with second order central differences.
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
from typing import Tuple, Union

# 3rd party
import attr
import numpy
from attr_utils.docstrings import add_attrs_doc

# this package
from stabrkc.enums import Boundary

__all__ = ["Grid"]


def _check_dims(instance, attribute: attr.Attribute, value: int):
	if value not in {1, 2}:
		raise ValueError(f"Only 1 and 2 dimensional grids are supported, not {value}")


def _check_n(instance, attribute: attr.Attribute, value: int):
	if value < 3:
		raise ValueError(f"A grid needs at least 3 points per axis, not {value}")


@add_attrs_doc
@attr.s(slots=True, frozen=True)
class Grid:
	"""
	A uniform grid with spacing :math:`1/N` in every direction.

	Periodic grids have points :math:`x_j = j/N`; zero-flux grids use the cell centres
	:math:`x_j = (j + 1/2)/N` with mirrored ghost points.
	Two dimensional fields are indexed ``[ix, iy]``.
	"""

	#: The number of spatial dimensions.
	dims: int = attr.ib(converter=int, validator=_check_dims)

	#: The number of points per axis.
	N: int = attr.ib(converter=int, validator=_check_n)

	boundary: Boundary = attr.ib(default=Boundary.PERIODIC, converter=Boundary)

	@property
	def h_x(self) -> float:
		"""
		The grid spacing.
		"""

		return 1.0 / self.N

	@property
	def shape(self) -> Tuple[int, ...]:
		"""
		The shape of a field on the grid.
		"""

		return (self.N, ) * self.dims

	@property
	def size(self) -> int:
		"""
		The number of points in the grid.
		"""

		return self.N**self.dims

	def axis_points(self) -> numpy.ndarray:
		"""
		The coordinates of the points along one axis.
		"""

		offset = 0.5 if self.boundary is Boundary.ZERO_FLUX else 0.0
		return (numpy.arange(self.N) + offset) / self.N

	def coordinates(self) -> Union[numpy.ndarray, Tuple[numpy.ndarray, numpy.ndarray]]:
		"""
		The point coordinates, as ``x`` for one dimensional grids or ``(x, y)`` arrays of :attr:`~.shape`.
		"""

		points = self.axis_points()
		if self.dims == 1:
			return points

		x, y = numpy.meshgrid(points, points, indexing="ij")
		return x, y

	def neighbours(self, field: numpy.ndarray, axis: int = 0) -> Tuple[numpy.ndarray, numpy.ndarray]:
		"""
		Returns the fields of left and right neighbours along ``axis``, :math:`(w_{j-1}, w_{j+1})`.

		:param field:
		:param axis:
		"""

		if self.boundary is Boundary.PERIODIC:
			return numpy.roll(field, 1, axis=axis), numpy.roll(field, -1, axis=axis)

		pad_width = [(0, 0)] * field.ndim
		pad_width[axis] = (1, 1)
		padded = numpy.pad(field, pad_width, mode="symmetric")
		return numpy.take(padded, range(0, self.N), axis=axis), numpy.take(padded, range(2, self.N + 2), axis=axis)

	def second_difference(self, field: numpy.ndarray, axis: int = 0) -> numpy.ndarray:
		"""
		:math:`(w_{j-1} - 2 w_j + w_{j+1}) / h_x^2` along ``axis``.

		:param field:
		:param axis:
		"""

		left, right = self.neighbours(field, axis)
		return (left - 2 * field + right) * self.N**2

	def central_difference(self, field: numpy.ndarray, axis: int = 0) -> numpy.ndarray:
		"""
		:math:`(w_{j+1} - w_{j-1}) / (2 h_x)` along ``axis``.

		:param field:
		:param axis:
		"""

		left, right = self.neighbours(field, axis)
		return (right - left) * (0.5 * self.N)

	def laplacian(self, field: numpy.ndarray) -> numpy.ndarray:
		"""
		The sum of the second differences along every axis.

		:param field:
		"""

		result = self.second_difference(field, 0)
		for axis in range(1, self.dims):
			result = result + self.second_difference(field, axis)

		return result
