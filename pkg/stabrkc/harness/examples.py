#!/usr/bin/env python3
#
#  examples.py
"""
The benchmark configurations, and their reference solutions.
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
import logging
from typing import Any, Dict, Mapping, Optional

# 3rd party
import attr
import numpy

# this package
from stabrkc.harness.config import HarnessConfig
from stabrkc.ode import SplitOde
from stabrkc.problems import make_problem
from stabrkc.problems.radius import PowerIterationRadius
from stabrkc.reference import ReferenceCache

__all__ = ["BenchExample", "EXAMPLES", "build_example", "reference_key", "reference_state"]

logger = logging.getLogger(__name__)


@attr.s(frozen=True, slots=True)
class BenchExample:
	"""
	A problem with its benchmark parameters.
	"""

	#: The problem id in :data:`stabrkc.problems.PROBLEMS`.
	problem: str = attr.ib()

	#: The default grid size. :py:obj:`None` for problems without a grid.
	N: Optional[int] = attr.ib()

	#: Keyword arguments for the problem factory.
	params: Mapping[str, Any] = attr.ib(factory=dict)


#: The benchmark configurations, by example id.
EXAMPLES: Dict[str, BenchExample] = {
		"ex1": BenchExample("wave2d", 100, {"B": 0.0, "A1": 0.05, "A2": 15.0}),
		"ex2a": BenchExample("ad1d", 200, {"A": 0.1, "D": 1.0}),
		"ex2b": BenchExample("ad1d", 200, {"A": 5.0, "D": 1.0}),
		"ex2c": BenchExample("ad1d", 200, {"A": 5.0, "D": 0.2}),
		"ex3a": BenchExample("brusselator2d", 200, {"A": 0.02, "D": 0.04}),
		"ex3b": BenchExample("brusselator2d", 200, {"A": 2.0, "D": 0.04}),
		"ex4": BenchExample("burgers1d", 100, {"A": 10.0, "D": 0.5}),
		"ex5": BenchExample("burgers2d", 100, {"A": 4.0, "D": 0.2}),
		"linear": BenchExample("linear", None),
		}


def _lookup(example_id: str) -> BenchExample:
	try:
		return EXAMPLES[example_id]
	except KeyError:
		raise ValueError(f"Unknown example {example_id!r}. Choose from {', '.join(EXAMPLES)}") from None


def build_example(example_id: str, N: Optional[int] = None, seed: int = 0) -> SplitOde:
	"""
	Construct the problem for ``example_id``.

	:param example_id: One of the keys of :data:`~.EXAMPLES`.
	:param N: Overrides the grid size.
	:param seed: The seed for spectral radius estimates by power iteration.
	"""

	example = _lookup(example_id)
	ode = make_problem(example.problem, example.N if N is None else N, **example.params)

	for provider in (ode.rho_D, ode.rho_A):
		if isinstance(provider, PowerIterationRadius):
			provider.seed = seed

	return ode


def reference_key(example_id: str, ode: SplitOde, N: Optional[int], h_ref: float) -> Dict[str, Any]:
	"""
	The cache key of the reference solution for ``example_id``.

	:param example_id:
	:param ode:
	:param N: The grid size actually used.
	:param h_ref:
	"""

	example = _lookup(example_id)
	return {
			"problem": example.problem,
			"params": dict(example.params),
			"N": example.N if N is None else N,
			"t0": ode.t0,
			"T": ode.T,
			"h_ref": h_ref,
			}


def reference_state(
		example_id: str,
		ode: SplitOde,
		config: HarnessConfig,
		N: Optional[int] = None,
		) -> numpy.ndarray:
	"""
	The solution at ``ode.T`` that errors are measured against.

	Problems with an exact solution use it; others use a cached Dormand-Prince reference.

	:param example_id:
	:param ode:
	:param config:
	:param N: The grid size actually used.

	:raises: :exc:`~stabrkc.errors.ReferenceMissingError` if the reference is not cached
		and ``config.no_compute_ref`` is set.
	"""

	if ode.exact is not None:
		return numpy.asarray(ode.exact(ode.T))

	cache = ReferenceCache(config.cache_dir)
	key = reference_key(example_id, ode, N, config.h_ref)
	return cache.get(key, ode, config.h_ref, compute=not config.no_compute_ref)
