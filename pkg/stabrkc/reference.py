#!/usr/bin/env python3
#
#  reference.py
"""
Fixed step Dormand-Prince reference solutions, and an on-disk cache for them.
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
import hashlib
import logging
import math
from typing import Any, Dict, Optional

# 3rd party
import attr
import numpy
import sdjson
from attr_utils.docstrings import add_attrs_doc
from attr_utils.serialise import serde
from domdf_python_tools.paths import PathPlus
from domdf_python_tools.typing import PathLike

# this package
from stabrkc.errors import NonFiniteStateError, ReferenceMissingError
from stabrkc.ode import SplitOde
from stabrkc.utils import is_finite

__all__ = ["DOPRI5_A", "DOPRI5_B", "DEFAULT_H_REF", "ReferenceConfig", "reference_solve", "ReferenceCache"]

logger = logging.getLogger(__name__)

#: The reference step size used unless overridden.
DEFAULT_H_REF: float = 2.0**-14

#: Stage coefficients of the Dormand-Prince 5(4) pair, row ``i`` for stage ``i + 1``.
DOPRI5_A = (
		(),
		(1 / 5, ),
		(3 / 40, 9 / 40),
		(44 / 45, -56 / 15, 32 / 9),
		(19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729),
		(9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656),
		)

#: Fifth order weights of the Dormand-Prince pair.
DOPRI5_B = (35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84)


def _check_h_ref(instance, attribute: attr.Attribute, value: float):
	if not value > 0:
		raise ValueError(f"'h_ref' must be positive, not {value}")


@serde
@add_attrs_doc
@attr.s(slots=True)
class ReferenceConfig:
	"""
	Settings for reference solutions.
	"""

	#: The fixed step size.
	h_ref: float = attr.ib(default=DEFAULT_H_REF, converter=float, validator=_check_h_ref)

	#: The explicit pair used. Only ``'dopri5'`` is available.
	method: str = attr.ib(default="dopri5")

	@method.validator
	def _check_method(self, attribute: attr.Attribute, value: str):
		if value != "dopri5":
			raise ValueError(f"Unknown reference method {value!r}")


def _dopri5_step(f, y: numpy.ndarray, h: float) -> numpy.ndarray:
	stages = []
	for row in DOPRI5_A:
		state = y
		for a, k in zip(row, stages):
			state = state + h * a * k
		stages.append(f(state))

	increment = sum(b * k for b, k in zip(DOPRI5_B, stages) if b)
	return y + h * increment


def reference_solve(ode: SplitOde, h_ref: float = DEFAULT_H_REF) -> numpy.ndarray:
	"""
	Integrate :math:`f_D + f_A` from ``t0`` to ``T`` with the fifth order Dormand-Prince method at a fixed step.

	The final step is truncated to land on ``T``.

	:param ode:
	:param h_ref:

	:raises: :exc:`~stabrkc.errors.NonFiniteStateError` with the step index if ``h_ref`` is too large
		for the problem.
	"""

	if not h_ref > 0:
		raise ValueError(f"'h_ref' must be positive, not {h_ref}")

	span = ode.T - ode.t0
	n_steps = max(1, math.ceil(span / h_ref * (1 - 1e-12)))
	y = numpy.array(ode.y0, dtype=float)
	t = ode.t0

	for index in range(n_steps):
		h = ode.T - t if index == n_steps - 1 else h_ref
		y = _dopri5_step(ode.f, y, h)
		t = ode.t0 + (index + 1) * h_ref

		if not is_finite(y):
			raise NonFiniteStateError("y_n+1", step=index)
		if index % 1024 == 1023:
			logger.debug("Reference %s: step %d of %d", ode.name or "problem", index + 1, n_steps)

	return y


class ReferenceCache:
	"""
	Reference states stored as ``.npy`` files, named by a hash of their key.

	Each state is accompanied by a JSON file recording the key.

	:param cache_dir:
	"""

	def __init__(self, cache_dir: PathLike):
		self.cache_dir = PathPlus(cache_dir)

	@staticmethod
	def digest(key: Dict[str, Any]) -> str:
		"""
		The SHA-256 digest naming the files for ``key``.

		:param key: JSON-serialisable parameters identifying the reference.
		"""

		encoded = sdjson.dumps(key, sort_keys=True)
		return hashlib.sha256(encoded.encode("UTF-8")).hexdigest()

	def path_for(self, key: Dict[str, Any]) -> PathPlus:
		"""
		Returns the ``.npy`` path for ``key``.

		:param key:
		"""

		return self.cache_dir / f"{self.digest(key)}.npy"

	def load(self, key: Dict[str, Any]) -> Optional[numpy.ndarray]:
		"""
		Returns the cached state for ``key``, or :py:obj:`None`.

		:param key:
		"""

		path = self.path_for(key)
		if not path.is_file():
			return None

		return numpy.load(str(path))

	def store(self, key: Dict[str, Any], y: numpy.ndarray) -> PathPlus:
		"""
		Cache ``y`` under ``key``.

		:param key:
		:param y:
		"""

		self.cache_dir.maybe_make(parents=True)
		path = self.path_for(key)
		numpy.save(str(path), numpy.asarray(y))
		path.with_suffix(".json").dump_json(key, json_library=sdjson, indent=2, sort_keys=True)  # type: ignore[arg-type]
		return path

	def get(
			self,
			key: Dict[str, Any],
			ode: SplitOde,
			h_ref: float = DEFAULT_H_REF,
			compute: bool = True,
			) -> numpy.ndarray:
		"""
		Returns the reference for ``key``, computing and caching it if required.

		:param key:
		:param ode:
		:param h_ref:
		:param compute: If :py:obj:`False`, a missing reference is an error.

		:raises: :exc:`~stabrkc.errors.ReferenceMissingError`
		"""

		cached = self.load(key)
		if cached is not None:
			return cached

		if not compute:
			raise ReferenceMissingError(f"No cached reference for {key!r} in {self.cache_dir}")

		logger.info("Computing reference for %s with h_ref=%r", ode.name or "problem", h_ref)
		y = reference_solve(ode, h_ref)
		self.store(key, y)
		return y
