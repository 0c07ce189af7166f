#!/usr/bin/env python3
#
#  config.py
"""
Configuration for the command line interface.

Values are resolved in the order command line flag, ``STABRKC_<KEY>`` environment variable,
the ``[stabrkc]`` section of an INI file, then the defaults of :class:`~.HarnessConfig`.
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
import os
from typing import Any, Dict, Iterable, List, Mapping, Optional, Union

# 3rd party
import attr
from attr_utils.docstrings import add_attrs_doc
from attr_utils.serialise import serde
from domdf_python_tools.paths import PathPlus
from domdf_python_tools.typing import PathLike
from iniconfig import IniConfig

# this package
from stabrkc.enums import OutputFormat
from stabrkc.reference import DEFAULT_H_REF
from stabrkc.utils import split_list, strip_string, to_bool

__all__ = ["CONFIG_KEYS", "ENV_PREFIX", "HarnessConfig", "read_config_file", "resolve_config"]

#: Prefix of environment variables overriding the configuration.
ENV_PREFIX: str = "STABRKC_"


def _float_list(value: Union[str, float, Iterable[Any]]) -> List[float]:
	if isinstance(value, str):
		values = [float(item) for item in split_list(value)]
	elif isinstance(value, (int, float)):
		values = [float(value)]
	else:
		values = [float(item) for item in value]

	if not values:
		raise ValueError("At least one tolerance is required")

	return values


def _str_list(value: Union[str, Iterable[str]]) -> List[str]:
	values = split_list(value)
	if not values:
		raise ValueError("At least one method is required")
	return values


def _optional_int(value: Any) -> Optional[int]:
	if value is None or value == '':
		return None
	return int(value)


def _optional_path(value: Optional[PathLike]) -> Optional[PathPlus]:
	if value is None or value == '':
		return None
	return PathPlus(value)


@serde
@add_attrs_doc
@attr.s(slots=True)
class HarnessConfig:
	"""
	Settings shared by the subcommands.
	"""

	#: Tolerances for benchmark and adaptive runs.
	tol: List[float] = attr.ib(factory=lambda: [1e-2, 1e-5], converter=_float_list)

	#: Method labels, e.g. ``nprkc2`` or ``prkc``.
	method: List[str] = attr.ib(factory=lambda: ["nprkc1", "nprkc2"], converter=_str_list)

	#: The problem or example id.
	problem: str = attr.ib(default="ex2a", converter=strip_string)

	#: Overrides the grid size of the problem.
	n: Optional[int] = attr.ib(default=None, converter=_optional_int)

	#: Where to write the output. Nothing is written if :py:obj:`None`.
	out: Optional[PathPlus] = attr.ib(default=None, converter=_optional_path)

	format: OutputFormat = attr.ib(default=OutputFormat.CSV, converter=OutputFormat)  # noqa: A003  # pylint: disable=redefined-builtin

	#: Seed for randomised spectral radius estimates.
	seed: int = attr.ib(default=0, converter=int)

	#: Fail instead of computing a reference solution that is not cached.
	no_compute_ref: bool = attr.ib(default=False, converter=to_bool)

	#: Directory for cached reference solutions.
	cache_dir: PathPlus = attr.ib(default=".stabrkc-cache", converter=PathPlus)

	#: Step size of reference solutions.
	h_ref: float = attr.ib(default=DEFAULT_H_REF, converter=float)


#: The keys that may be set by flag, environment variable or config file.
CONFIG_KEYS = tuple(a.name for a in attr.fields(HarnessConfig))


def read_config_file(filename: PathLike) -> Dict[str, str]:
	"""
	Read the ``[stabrkc]`` section of an INI file.

	:param filename:

	:raises: :exc:`ValueError` if the section contains an unknown key.
	"""

	ini = IniConfig(str(filename))
	if "stabrkc" not in ini:
		return {}

	values = dict(ini["stabrkc"].items())
	unknown = set(values) - set(CONFIG_KEYS)
	if unknown:
		raise ValueError(f"Unknown keys in {filename}: {', '.join(sorted(unknown))}")

	return values


def resolve_config(
		cli: Mapping[str, Any],
		environ: Optional[Mapping[str, str]] = None,
		config_file: Optional[PathLike] = None,
		) -> HarnessConfig:
	"""
	Combine the configuration sources into a :class:`~.HarnessConfig`.

	:param cli: Parsed command line values. :py:obj:`None` means the flag was not given.
	:param environ: Defaults to :py:data:`os.environ`.
	:param config_file: Defaults to the ``STABRKC_CONFIG`` environment variable, if set.
	"""

	if environ is None:
		environ = os.environ

	values: Dict[str, Any] = {}

	if config_file is None:
		config_file = environ.get(f"{ENV_PREFIX}CONFIG") or None
	if config_file is not None:
		values.update(read_config_file(config_file))

	for key in CONFIG_KEYS:
		env_value = environ.get(f"{ENV_PREFIX}{key.upper()}")
		if env_value is not None:
			values[key] = env_value

	for key in CONFIG_KEYS:
		cli_value = cli.get(key)
		if cli_value is not None:
			values[key] = cli_value

	return HarnessConfig(**values)
