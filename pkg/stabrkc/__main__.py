#!/usr/bin/env python3
#
#  __main__.py
"""
Command line interface.

.. code-block:: bash

	stabrkc [-v] [--config FILE] {region,bench,convergence,integrate} ...
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
import argparse
import logging
import sys
from typing import List, Optional

# this package
from stabrkc.enums import OutputFormat
from stabrkc.errors import StabRKCError
from stabrkc.harness.commands import cmd_bench, cmd_convergence, cmd_integrate, cmd_region
from stabrkc.harness.config import resolve_config
from stabrkc.harness.records import parse_method_label

__all__ = ["build_parser", "main"]


def _add_common(parser: argparse.ArgumentParser) -> None:
	parser.add_argument("--problem", help="The example id, e.g. ex2a.")
	parser.add_argument("--n", type=int, help="Overrides the grid size of the example.")
	parser.add_argument("--out", help="The file to write.")
	parser.add_argument("--format", choices=[f.value for f in OutputFormat])
	parser.add_argument("--seed", type=int, help="Seed for spectral radius estimates.")
	parser.add_argument(
			"--no-compute-ref",
			dest="no_compute_ref",
			action="store_true",
			default=None,
			help="Fail if the reference solution is not cached.",
			)
	parser.add_argument("--cache-dir", dest="cache_dir", help="Directory for cached reference solutions.")
	parser.add_argument("--h-ref", dest="h_ref", type=float, help="Step size of reference solutions.")


def build_parser() -> argparse.ArgumentParser:
	"""
	Create the argument parser for ``stabrkc``.
	"""

	parser = argparse.ArgumentParser(prog="stabrkc", description=__doc__.strip().splitlines()[0])
	parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG.")
	parser.add_argument("--config", help="INI file with a [stabrkc] section.")
	subparsers = parser.add_subparsers(dest="command", required=True)

	region = subparsers.add_parser("region", help="Sample a stability region.")
	region.add_argument("--method", required=True)
	region.add_argument("--s", type=int, required=True)
	region.add_argument("--m", type=int, default=1)
	region.add_argument("--eta", type=float)
	region.add_argument("--p-range", dest="p_range", type=float, nargs=2, required=True, metavar=("P0", "P1"))
	region.add_argument("--q-range", dest="q_range", type=float, nargs=2, required=True, metavar=("Q0", "Q1"))
	region.add_argument("--np", type=int)
	region.add_argument("--nq", type=int)
	region.add_argument("--out")

	bench = subparsers.add_parser("bench", help="Run a benchmark table.")
	bench.add_argument("--tol", type=float, nargs='+')
	bench.add_argument("--method", nargs='+')
	_add_common(bench)

	convergence = subparsers.add_parser("convergence", help="Measure the order of a fixed step method.")
	convergence.add_argument("--method", nargs='+')
	convergence.add_argument("--h", type=float, nargs='+', required=True, help="The step sizes.")
	convergence.add_argument("--s", type=int)
	convergence.add_argument("--m", type=int)
	_add_common(convergence)

	integrate = subparsers.add_parser("integrate", help="Integrate one problem with one method.")
	integrate.add_argument("--method", nargs='+')
	integrate.add_argument("--tol", type=float, nargs='+')
	integrate.add_argument("--h", type=float, help="Fixed step size. Adaptive if omitted.")
	integrate.add_argument("--s", type=int)
	integrate.add_argument("--m", type=int)
	_add_common(integrate)

	return parser


def _run(args: argparse.Namespace) -> None:
	if args.command == "region":
		cmd_region(
				args.method,
				tuple(args.p_range),
				tuple(args.q_range),
				s=args.s,
				m=args.m,
				eta=args.eta,
				np=args.np,
				nq=args.nq,
				out=args.out,
				)
		return

	config = resolve_config(vars(args), config_file=args.config)

	if args.command == "bench":
		cmd_bench(config.problem, config)
	elif args.command == "convergence":
		method = parse_method_label(config.method[0])[0]
		report = cmd_convergence(method, config.problem, args.h, config, s=args.s, m=args.m)
		print(f"slope: {report['slope']}")
	else:
		summary = cmd_integrate(config.method[0], config.problem, config, h=args.h, s=args.s, m=args.m)
		print(f"finite: {str(summary['finite']).lower()}")


def main(argv: Optional[List[str]] = None) -> int:
	"""
	Entry point for ``stabrkc``.

	:param argv: Defaults to :py:data:`sys.argv`.

	:returns: The exit status.
	"""

	parser = build_parser()
	args = parser.parse_args(argv)

	level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
	logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")

	try:
		_run(args)
	except (StabRKCError, ValueError) as e:
		print(f"stabrkc: error: {e}", file=sys.stderr)
		return 1

	return 0


if __name__ == "__main__":
	sys.exit(main())
