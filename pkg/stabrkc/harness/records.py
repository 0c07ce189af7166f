#!/usr/bin/env python3
#
#  records.py
"""
Benchmark records and their CSV and JSON serialisation.
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
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

# 3rd party
import attr
import numpy
import pandas  # type: ignore
import sdjson
from attr_utils.docstrings import add_attrs_doc
from attr_utils.serialise import serde
from domdf_python_tools.paths import PathPlus
from domdf_python_tools.typing import PathLike

# this package
from stabrkc.adaptive import StepRecord
from stabrkc.enums import Estimator, MethodId

__all__ = [
		"SCHEMA_VERSION",
		"BENCH_COLUMNS",
		"BenchRecord",
		"parse_method_label",
		"records_to_frame",
		"trace_to_frame",
		"write_json",
		"write_records",
		]

#: Version number written to every JSON artefact.
SCHEMA_VERSION: int = 1

#: Column order of benchmark tables. Wall time is only written to JSON.
BENCH_COLUMNS = (
		"example",
		"tol",
		"method",
		"err_rms",
		"err_max",
		"n_accept",
		"n_reject",
		"nfd",
		"nfa",
		"nfe",
		"audit_ok",
		"status",
		)


def parse_method_label(label: str) -> Tuple[MethodId, Estimator]:
	"""
	Split a benchmark method label into a method and an estimator.

	``nprkc1`` and ``nprkc2`` select the NPRKC error estimator; plain ``nprkc`` uses the second.

	:param label:
	"""

	label = label.strip().lower()

	if label in {"nprkc1", "nprkc2"}:
		return MethodId.NPRKC, Estimator(int(label[-1]))

	try:
		return MethodId(label), Estimator.VARIANT_2
	except ValueError:
		raise ValueError(f"Unknown method {label!r}") from None


@serde
@add_attrs_doc
@attr.s(slots=True)
class BenchRecord:
	"""
	One cell of a benchmark table.
	"""

	#: The example id.
	example: str = attr.ib()

	#: The tolerance.
	tol: float = attr.ib()

	#: The method label.
	method: str = attr.ib()

	#: Root mean square error against the reference.
	err_rms: float = attr.ib()

	#: Maximum error against the reference.
	err_max: float = attr.ib()

	#: Accepted steps.
	n_accept: int = attr.ib()

	#: Rejected steps.
	n_reject: int = attr.ib()

	#: Diffusion evaluations.
	nfd: int = attr.ib()

	#: Advection evaluations.
	nfa: int = attr.ib()

	#: Whether the counters match the per step cost formula.
	audit_ok: bool = attr.ib(default=True)

	#: ``'ok'``, or the name of the exception that ended the run.
	status: str = attr.ib(default="ok")

	#: Seconds taken. Informational only.
	wall_time: float = attr.ib(default=0.0)

	@property
	def nfe(self) -> int:
		"""
		The total number of function evaluations.
		"""

		return self.nfd + self.nfa


def records_to_frame(records: Iterable[BenchRecord], include_wall_time: bool = False) -> pandas.DataFrame:
	"""
	Convert benchmark records into a :class:`pandas.DataFrame` with columns :data:`~.BENCH_COLUMNS`.

	:param records:
	:param include_wall_time:
	"""

	columns = list(BENCH_COLUMNS)
	if include_wall_time:
		columns.append("wall_time")

	rows = []
	for record in records:
		row = record.to_dict()
		row["nfe"] = record.nfe
		rows.append(row)

	return pandas.DataFrame(rows, columns=columns)


def trace_to_frame(trace: Sequence[StepRecord]) -> pandas.DataFrame:
	"""
	Convert a step trace into a :class:`pandas.DataFrame`.

	:param trace:
	"""

	columns = [a.name for a in attr.fields(StepRecord)]
	return pandas.DataFrame([record.to_dict() for record in trace], columns=columns)


def write_json(filename: PathLike, payload: Dict[str, Any]) -> PathPlus:
	"""
	Write ``payload`` to ``filename`` as JSON, with a ``schema`` field.

	:param filename:
	:param payload:
	"""

	filename = PathPlus(filename)
	filename.parent.maybe_make(parents=True)
	filename.dump_json(
			{"schema": SCHEMA_VERSION, **payload},
			json_library=sdjson,  # type: ignore
			indent=2,
			)
	return filename


def write_records(
		records: List[BenchRecord],
		filename: PathLike,
		fmt: str = "csv",
		extra: Optional[Dict[str, Any]] = None,
		) -> PathPlus:
	"""
	Write benchmark records as CSV (without wall time) or JSON (with it).

	:param records:
	:param filename:
	:param fmt: ``'csv'`` or ``'json'``.
	:param extra: Additional top level fields for JSON output.
	"""

	filename = PathPlus(filename)

	if fmt == "json":
		rows = [{**record.to_dict(), "nfe": record.nfe} for record in records]
		return write_json(filename, {**(extra or {}), "records": rows})

	filename.parent.maybe_make(parents=True)
	records_to_frame(records).to_csv(filename, index=False)
	return filename


@sdjson.encoders.register(numpy.ndarray)
def encode_ndarray(obj):  # noqa: D103
	return obj.tolist()


@sdjson.encoders.register(numpy.floating)
def encode_numpy_float(obj):  # noqa: D103
	return float(obj)


@sdjson.encoders.register(numpy.integer)
def encode_numpy_int(obj):  # noqa: D103
	return int(obj)


@sdjson.encoders.register(numpy.bool_)
def encode_numpy_bool(obj):  # noqa: D103
	return bool(obj)


@sdjson.encoders.register(PathPlus)
def encode_path(obj):  # noqa: D103
	return obj.as_posix()
