# 3rd party
import pytest
from domdf_python_tools.paths import PathPlus

# this package
from stabrkc.enums import OutputFormat
from stabrkc.harness.config import CONFIG_KEYS, HarnessConfig, read_config_file, resolve_config
from stabrkc.reference import DEFAULT_H_REF

NO_FLAGS = dict.fromkeys(CONFIG_KEYS)


class TestHarnessConfig:

	def test_defaults(self):
		config = HarnessConfig()
		assert config.tol == [1e-2, 1e-5]
		assert config.method == ["nprkc1", "nprkc2"]
		assert config.problem == "ex2a"
		assert config.n is None
		assert config.out is None
		assert config.format is OutputFormat.CSV
		assert config.seed == 0
		assert config.no_compute_ref is False
		assert config.cache_dir == PathPlus(".stabrkc-cache")
		assert config.h_ref == DEFAULT_H_REF

	def test_conversion_from_strings(self):
		config = HarnessConfig(
				tol="1e-3, 1e-6",
				method="prkc arkc",
				problem=" ex4 ",
				n="64",
				out="results/ex4.json",
				format="json",
				seed="3",
				no_compute_ref="yes",
				cache_dir="/tmp/refs",
				h_ref="0.001",
				)

		assert config.tol == [1e-3, 1e-6]
		assert config.method == ["prkc", "arkc"]
		assert config.problem == "ex4"
		assert config.n == 64
		assert config.out == PathPlus("results/ex4.json")
		assert config.format is OutputFormat.JSON
		assert config.seed == 3
		assert config.no_compute_ref is True
		assert config.cache_dir == PathPlus("/tmp/refs")
		assert config.h_ref == 0.001

	def test_single_tolerance(self):
		assert HarnessConfig(tol=1e-4).tol == [1e-4]

	def test_empty_n(self):
		assert HarnessConfig(n='').n is None

	@pytest.mark.parametrize("kwargs", [{"tol": ''}, {"method": []}, {"format": "xml"}, {"no_compute_ref": "perhaps"}])
	def test_invalid(self, kwargs):
		with pytest.raises(ValueError):
			HarnessConfig(**kwargs)

	def test_to_dict(self):
		assert HarnessConfig(n=8).to_dict()["n"] == 8


class TestReadConfigFile:

	def test_section(self, tmp_pathplus: PathPlus):
		(tmp_pathplus / "stabrkc.ini").write_lines([
				"[stabrkc]",
				"tol = 1e-3 1e-4",
				"method = nprkc2",
				"[other]",
				"tol = 5",
				])

		assert read_config_file(tmp_pathplus / "stabrkc.ini") == {"tol": "1e-3 1e-4", "method": "nprkc2"}

	def test_no_section(self, tmp_pathplus: PathPlus):
		(tmp_pathplus / "setup.cfg").write_lines(["[metadata]", "name = something"])
		assert read_config_file(tmp_pathplus / "setup.cfg") == {}

	def test_unknown_key(self, tmp_pathplus: PathPlus):
		(tmp_pathplus / "stabrkc.ini").write_lines(["[stabrkc]", "tolerance = 1e-3", "colour = red"])

		with pytest.raises(ValueError, match="Unknown keys in .*: colour, tolerance"):
			read_config_file(tmp_pathplus / "stabrkc.ini")


class TestResolveConfig:

	@pytest.fixture()
	def config_file(self, tmp_pathplus: PathPlus) -> PathPlus:
		filename = tmp_pathplus / "stabrkc.ini"
		filename.write_lines([
				"[stabrkc]",
				"tol = 1e-6",
				"method = prkc",
				"problem = ex3a",
				"seed = 4",
				])
		return filename

	def test_defaults(self):
		assert resolve_config(NO_FLAGS, environ={}).to_dict() == HarnessConfig().to_dict()

	def test_file(self, config_file: PathPlus):
		config = resolve_config(NO_FLAGS, environ={}, config_file=config_file)
		assert config.tol == [1e-6]
		assert config.method == ["prkc"]
		assert config.problem == "ex3a"
		assert config.seed == 4

	def test_file_from_environment(self, config_file: PathPlus):
		config = resolve_config(NO_FLAGS, environ={"STABRKC_CONFIG": str(config_file)})
		assert config.problem == "ex3a"

	def test_environment_beats_file(self, config_file: PathPlus):
		environ = {"STABRKC_PROBLEM": "ex4", "STABRKC_NO_COMPUTE_REF": "1"}
		config = resolve_config(NO_FLAGS, environ=environ, config_file=config_file)

		assert config.problem == "ex4"
		assert config.no_compute_ref is True
		assert config.seed == 4

	def test_flags_beat_environment(self, config_file: PathPlus):
		flags = {**NO_FLAGS, "problem": "ex5", "tol": [1e-2, 1e-3], "command": "bench", "verbose": 0}
		environ = {"STABRKC_PROBLEM": "ex4", "STABRKC_TOL": "1e-9"}
		config = resolve_config(flags, environ=environ, config_file=config_file)

		assert config.problem == "ex5"
		assert config.tol == [1e-2, 1e-3]
		assert config.method == ["prkc"]

	def test_unset_flags_are_ignored(self):
		flags = {**NO_FLAGS, "no_compute_ref": None}
		assert resolve_config(flags, environ={"STABRKC_NO_COMPUTE_REF": "true"}).no_compute_ref is True
