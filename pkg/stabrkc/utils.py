#!/usr/bin/env python3
#
#  utils.py
"""
General utility functions.
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
import re
from typing import Iterable, List, Sequence, Union

# 3rd party
import numpy
from domdf_python_tools.utils import strtobool

__all__ = [
		"to_bool",
		"strip_string",
		"split_list",
		"rms_norm",
		"max_norm",
		"fit_slope",
		"is_finite",
		"format_float",
		]


def to_bool(val: Union[str, bool, int]) -> bool:
	"""
	Returns the boolean representation of ``val``.

	:py:obj:`True` values are ``'y'``, ``'yes'``, ``'t'``, ``'true'``, ``'on'``, ``'1'``, and ``1``.

	:py:obj:`False` values are ``'n'``, ``'no'``, ``'f'``, ``'false'``, ``'off'``, ``'0'``, and ``0``.

	:raises: :py:exc:`ValueError` if 'val' is anything else.
	"""

	if isinstance(val, bool):
		return val

	return bool(strtobool(str(val).strip()))


def strip_string(val: str) -> str:
	"""
	Returns ``val`` as a string, without any leading or trailing whitespace.

	:param val:
	"""

	return str(val).strip()


def split_list(val: Union[str, Iterable[str]]) -> List[str]:
	"""
	Split a comma or whitespace separated string into a list of non-empty items.

	Lists and tuples are returned with each element stripped.

	:param val:
	"""

	if isinstance(val, str):
		return [item for item in re.split(r"[\s,]+", val) if item]

	return [strip_string(item) for item in val if strip_string(item)]


def rms_norm(vec: numpy.ndarray) -> float:
	r"""
	The root mean square norm, :math:`\sqrt{\frac{1}{d}\sum_i |e_i|^2}`.

	:param vec:
	"""

	vec = numpy.asarray(vec)
	if vec.size == 0:
		return 0.0

	return float(numpy.sqrt(numpy.mean(numpy.abs(vec)**2)))


def max_norm(vec: numpy.ndarray) -> float:
	"""
	The maximum absolute entry of ``vec``.

	:param vec:
	"""

	vec = numpy.asarray(vec)
	if vec.size == 0:
		return 0.0

	return float(numpy.max(numpy.abs(vec)))


def fit_slope(xs: Sequence[float], ys: Sequence[float]) -> float:
	"""
	Least squares slope of ``log(ys)`` against ``log(xs)``.

	:param xs: e.g. step sizes.
	:param ys: e.g. errors. Must be positive.

	:raises: :py:exc:`ValueError` if fewer than two points are given.
	"""

	if len(xs) != len(ys):
		raise ValueError("'xs' and 'ys' must have the same length")
	if len(xs) < 2:
		raise ValueError("At least two points are required to fit a slope")

	slope, _ = numpy.polyfit(numpy.log(numpy.asarray(xs, dtype=float)), numpy.log(numpy.asarray(ys, dtype=float)), 1)
	return float(slope)


def is_finite(vec: numpy.ndarray) -> bool:
	"""
	Returns whether every entry of ``vec`` is finite.

	:param vec:
	"""

	return bool(numpy.isfinite(vec).all())


def format_float(value: float) -> str:
	"""
	Format ``value`` with the shortest representation that round-trips.

	:param value:
	"""

	return repr(float(value))
