#!/usr/bin/env python3
#
#  __init__.py
"""
Stability scans, convergence studies and benchmark tables.
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
from stabrkc.harness.commands import cmd_bench, cmd_convergence, cmd_integrate, cmd_region
from stabrkc.harness.config import HarnessConfig, resolve_config
from stabrkc.harness.examples import EXAMPLES, build_example, reference_state
from stabrkc.harness.records import BenchRecord, parse_method_label

__all__ = [
		"BenchRecord",
		"EXAMPLES",
		"HarnessConfig",
		"build_example",
		"cmd_bench",
		"cmd_convergence",
		"cmd_integrate",
		"cmd_region",
		"parse_method_label",
		"reference_state",
		"resolve_config",
		]
