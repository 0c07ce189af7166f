#!/usr/bin/env python3
#
#  commands.py
"""
The operations behind the ``stabrkc`` subcommands.
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
import math
import time
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

# 3rd party
import numpy
from domdf_python_tools.paths import PathPlus
from domdf_python_tools.typing import PathLike
from typing_extensions import TypedDict

# this package
from stabrkc.adaptive import AdaptiveConfig, audit_counters, integrate_adaptive, integrate_fixed, select_stages
from stabrkc.enums import MethodId
from stabrkc.errors import IntegrationError, NonFiniteStateError, StabRKCError
from stabrkc.harness.config import HarnessConfig
from stabrkc.harness.examples import build_example, reference_state
from stabrkc.harness.records import BenchRecord, parse_method_label, trace_to_frame, write_json, write_records
from stabrkc.stability import StabilityGrid, scan_region
from stabrkc.utils import fit_slope, is_finite, max_norm, rms_norm

__all__ = ["REGION_METHODS", "ConvergenceRun", "cmd_bench", "cmd_convergence", "cmd_integrate", "cmd_region"]

logger = logging.getLogger(__name__)

#: Methods with a stability function in two variables.
REGION_METHODS = (MethodId.RKC, MethodId.PRKC, MethodId.ARKC, MethodId.NPRKC)


class ConvergenceRun(TypedDict):
	"""
	:class:`~typing.TypedDict` for one step size of a convergence study.
	"""

	h: float  #: The step size.
	finite: bool  #: Whether the run stayed finite.
	err_rms: Optional[float]  #: RMS error at ``T``, or :py:obj:`None` if the run blew up.
	err_max: Optional[float]  #: Maximum error at ``T``, or :py:obj:`None` if the run blew up.


def cmd_region(
		method: Union[MethodId, str],
		p_range: Tuple[float, float],
		q_range: Tuple[float, float],
		*,
		s: int,
		m: int = 1,
		eta: Optional[float] = None,
		np: Optional[int] = None,
		nq: Optional[int] = None,
		out: Optional[PathLike] = None,
		) -> StabilityGrid:
	"""
	Sample the stability function of ``method`` and optionally write the ``p,q,absR`` grid.

	:param method: One of :data:`~.REGION_METHODS`.
	:param p_range:
	:param q_range:
	:param s:
	:param m:
	:param eta:
	:param np:
	:param nq:
	:param out: The CSV file to write.
	"""

	method = MethodId(method)
	if method not in REGION_METHODS:
		raise ValueError(f"No stability region is defined for {method.value!r}")
	if s < 2:
		raise ValueError(f"'s' must be at least 2, not {s}")
	if m < 1:
		raise ValueError(f"'m' must be at least 1, not {m}")

	grid = scan_region(method, p_range, q_range, np, nq, s=s, m=m, eta=eta)

	if out is not None:
		grid.to_csv(out)

	return grid


def _final_errors(y: numpy.ndarray, reference: numpy.ndarray) -> Tuple[float, float]:
	difference = numpy.asarray(y) - numpy.asarray(reference)
	return rms_norm(difference), max_norm(difference)


def cmd_bench(example_id: str, config: HarnessConfig) -> List[BenchRecord]:
	"""
	Run every ``(tol, method)`` cell of a benchmark table.

	Cells are run in the order of ``config.tol``, then ``config.method``.

	:param example_id: One of the keys of :data:`~stabrkc.harness.examples.EXAMPLES`.
	:param config: Supplies the tolerances, methods, grid size, reference settings and output.

	:raises: :exc:`~stabrkc.errors.ReferenceMissingError`
	"""

	if not config.tol:
		raise ValueError("At least one tolerance is required")

	methods = [(label, *parse_method_label(label)) for label in config.method]

	ode = build_example(example_id, config.n, config.seed)
	reference = reference_state(example_id, ode, config, config.n)

	records = []

	for tol in config.tol:
		for label, method, estimator in methods:
			adaptive_config = AdaptiveConfig(tol=tol, estimator=estimator)
			start = time.perf_counter()

			try:
				result = integrate_adaptive(ode, adaptive_config, method)
			except StabRKCError as e:
				logger.info("%s tol=%r %s failed: %s", example_id, tol, label, e)
				record = BenchRecord(
						example_id,
						tol,
						label,
						math.nan,
						math.nan,
						0,
						0,
						0,
						0,
						audit_ok=False,
						status=type(e).__name__,
						wall_time=time.perf_counter() - start,
						)
			else:
				err_rms, err_max = _final_errors(result.y, reference)
				stats = result.stats
				record = BenchRecord(
						example_id,
						tol,
						label,
						err_rms,
						err_max,
						stats.n_accept,
						stats.n_reject,
						stats.nfd,
						stats.nfa,
						audit_ok=audit_counters(result.trace, stats, method, estimator),
						wall_time=time.perf_counter() - start,
						)
				logger.info(
						"%s tol=%r %s: err=%.4e nac=%d nrej=%d nfd=%d nfa=%d",
						example_id,
						tol,
						label,
						err_rms,
						stats.n_accept,
						stats.n_reject,
						stats.nfd,
						stats.nfa,
						)

			records.append(record)

	if config.out is not None:
		path = write_records(records, config.out, config.format.value, extra={"example": example_id})
		logger.info("Wrote %d records to %s", len(records), path)

	return records


def cmd_convergence(
		method: Union[MethodId, str],
		example_id: str,
		h_ladder: Sequence[float],
		config: HarnessConfig,
		*,
		s: Optional[int] = None,
		m: Optional[int] = None,
		) -> Dict[str, Any]:
	"""
	Measure the global error at ``T`` for each step size of ``h_ladder`` and fit the order.

	The stage counts are chosen once, for the largest step size, unless given.
	Runs that become non-finite are reported but left out of the fit.

	:param method: Any method id.
	:param example_id:
	:param h_ladder: At least two distinct step sizes.
	:param config: Supplies the grid size, reference settings and output.
	:param s:
	:param m:

	:returns: The report, as written to ``config.out``.
	"""

	method = MethodId(method)
	ladder = sorted({float(h) for h in h_ladder}, reverse=True)

	if len(ladder) < 2:
		raise ValueError(f"At least two distinct step sizes are needed to fit an order, got {list(h_ladder)}")
	if ladder[-1] <= 0:
		raise ValueError(f"Step sizes must be positive, got {ladder[-1]}")

	ode = build_example(example_id, config.n, config.seed)
	reference = reference_state(example_id, ode, config, config.n)

	y0 = numpy.asarray(ode.y0)
	chosen_s, chosen_m = select_stages(method, ladder[0], float(ode.rho_D(y0)), float(ode.rho_A(y0)))
	s = chosen_s if s is None else s
	m = chosen_m if m is None else m

	runs: List[ConvergenceRun] = []

	for h in ladder:
		try:
			result = integrate_fixed(ode, method, h, s=s, m=m)
		except NonFiniteStateError as e:
			logger.info("%s h=%r: non-finite at step %s", method.value, h, e.step)
			runs.append({"h": h, "finite": False, "err_rms": None, "err_max": None})
			continue

		err_rms, err_max = _final_errors(result.y, reference)
		finite = math.isfinite(err_rms)
		runs.append({
				"h": h,
				"finite": finite,
				"err_rms": err_rms if finite else None,
				"err_max": err_max if finite else None,
				})

	usable = [run for run in runs if run["finite"] and run["err_rms"] > 0]
	if len(usable) >= 2:
		slope: Optional[float] = fit_slope([run["h"] for run in usable], [run["err_rms"] for run in usable])
	else:
		logger.warning("Too few finite runs to fit an order")
		slope = None

	report = {
			"method": method.value,
			"problem": example_id,
			"N": config.n,
			"s": s,
			"m": m,
			"slope": slope,
			"runs": runs,
			}

	if config.out is not None:
		path = write_json(config.out, report)
		logger.info("Wrote convergence report to %s", path)

	return report


def cmd_integrate(
		method_label: str,
		example_id: str,
		config: HarnessConfig,
		*,
		h: Optional[float] = None,
		s: Optional[int] = None,
		m: Optional[int] = None,
		) -> Dict[str, Any]:
	"""
	Integrate one problem with one method, adaptively with ``config.tol[0]`` or at the fixed step ``h``.

	A run that becomes non-finite is reported with ``finite`` set to :py:obj:`False`.

	When ``config.out`` is set the final state is written next to it with the suffix ``.npy``,
	and ``config.out`` receives the step trace (CSV) or the summary (JSON).

	:param method_label: A method id, or ``nprkc1`` / ``nprkc2`` to pick the estimator.
	:param example_id:
	:param config:
	:param h: The fixed step size. Adaptive if :py:obj:`None`.
	:param s:
	:param m:

	:returns: The summary.
	"""

	method, estimator = parse_method_label(method_label)
	ode = build_example(example_id, config.n, config.seed)

	summary: Dict[str, Any] = {
			"method": method_label,
			"problem": example_id,
			"N": config.n,
			"mode": "adaptive" if h is None else "fixed",
			"tol": config.tol[0] if h is None else None,
			"h": h,
			}

	result = None
	try:
		if h is None:
			result = integrate_adaptive(ode, AdaptiveConfig(tol=config.tol[0], estimator=estimator), method)
		else:
			result = integrate_fixed(ode, method, h, s=s, m=m)
	except NonFiniteStateError as e:
		summary.update(finite=False, stage=e.stage, step=e.step)
	except IntegrationError as e:
		summary.update(finite=False, reason=str(e))

	trace = []
	if result is not None:
		finite = is_finite(result.y)
		trace = result.trace
		summary.update(
				finite=finite,
				max_abs=max_norm(result.y) if finite else None,
				n_accept=result.stats.n_accept,
				n_reject=result.stats.n_reject,
				nfd=result.stats.nfd,
				nfa=result.stats.nfa,
				nfe=result.stats.nfe,
				)
		if trace:
			summary.update(s=trace[-1].s, m=trace[-1].m)
		if finite and ode.exact is not None:
			summary["err_rms"], summary["err_max"] = _final_errors(result.y, ode.exact(ode.T))

	logger.info("%s %s: finite=%s", example_id, method.value, summary["finite"])

	if config.out is not None:
		out = PathPlus(config.out)
		out.parent.maybe_make(parents=True)

		if result is not None and summary["finite"]:
			numpy.save(str(out.with_suffix(".npy")), result.y)

		if config.format.value == "json":
			write_json(out, {**summary, "trace": [record.to_dict() for record in trace]})
		else:
			trace_to_frame(trace).to_csv(out, index=False)

		logger.info("Wrote %s", out)

	return summary
