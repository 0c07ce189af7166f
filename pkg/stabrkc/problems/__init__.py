#!/usr/bin/env python3
#
#  __init__.py
"""
Method of lines benchmark problems.

Each factory returns a :class:`~stabrkc.ode.SplitOde`. Problems are looked up by id
with :func:`~.make_problem`.
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
from typing import Any, Callable, Dict, Optional

# this package
from stabrkc.ode import SplitOde
from stabrkc.problems.advection_diffusion import ad_eigenvalues, advection_diffusion_1d
from stabrkc.problems.brusselator import brusselator_2d
from stabrkc.problems.burgers import burgers_1d, burgers_2d
from stabrkc.problems.damped_wave import damped_wave_2d, wave_eigenvalues
from stabrkc.problems.grid import Grid
from stabrkc.problems.linear import linear_split
from stabrkc.problems.radius import power_iteration_radius

__all__ = [
		"PROBLEMS",
		"make_problem",
		"Grid",
		"ad_eigenvalues",
		"advection_diffusion_1d",
		"brusselator_2d",
		"burgers_1d",
		"burgers_2d",
		"damped_wave_2d",
		"linear_split",
		"power_iteration_radius",
		"wave_eigenvalues",
		]

#: Mapping of problem ids to factories.
PROBLEMS: Dict[str, Callable[..., SplitOde]] = {
		"ad1d": advection_diffusion_1d,
		"wave2d": damped_wave_2d,
		"brusselator2d": brusselator_2d,
		"burgers1d": burgers_1d,
		"burgers2d": burgers_2d,
		"linear": linear_split,
		}


def make_problem(problem_id: str, N: Optional[int] = None, **params: Any) -> SplitOde:
	"""
	Construct the problem registered under ``problem_id``.

	:param problem_id: One of the keys of :data:`~.PROBLEMS`.
	:param N: The number of grid points per axis. Ignored by ``linear``.
	:param params: Further keyword arguments for the factory.
	"""

	try:
		factory = PROBLEMS[problem_id]
	except KeyError:
		raise ValueError(f"Unknown problem {problem_id!r}. Choose from {', '.join(PROBLEMS)}") from None

	if factory is linear_split:
		return factory(**params)

	if N is None:
		raise ValueError(f"The problem {problem_id!r} needs a grid size 'N'")

	return factory(N, **params)
