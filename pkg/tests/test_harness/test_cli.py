# stdlib
import os

# 3rd party
import pytest
from domdf_python_tools.paths import PathPlus

# this package
from stabrkc.__main__ import build_parser, main
from stabrkc.harness.config import ENV_PREFIX


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
	for name in list(os.environ):
		if name.startswith(ENV_PREFIX):
			monkeypatch.delenv(name)


def test_region(tmp_pathplus: PathPlus):
	out = tmp_pathplus / "region.csv"
	argv = [
			"region",
			"--method",
			"nprkc",
			"--s",
			'5',
			"--m",
			'2',
			"--p-range",
			"-10",
			'0',
			"--q-range",
			"-2",
			'2',
			"--np",
			'5',
			"--nq",
			'3',
			"--out",
			str(out),
			]

	assert main(argv) == 0
	assert out.read_lines()[0] == "p,q,absR"
	assert out.read_lines()[1].startswith("-10.0,-2.0,")


def test_region_error(capsys):
	argv = ["region", "--method", "rk3", "--s", '5', "--p-range", "-1", '0', "--q-range", '0', '1']
	assert main(argv) == 1
	assert "stabrkc: error: No stability region is defined for 'rk3'" in capsys.readouterr().err


def test_integrate(capsys):
	assert main(["integrate", "--method", "nprkc2", "--problem", "linear", "--tol", "1e-4"]) == 0
	assert capsys.readouterr().out == "finite: true\n"


def test_convergence(capsys):
	assert main(["convergence", "--method", "rk3", "--problem", "linear", "--h", "0.1", "0.05"]) == 0
	assert capsys.readouterr().out.startswith("slope: ")


def test_bench(tmp_pathplus: PathPlus):
	out = tmp_pathplus / "bench.json"
	argv = [
			"bench",
			"--problem",
			"ex2a",
			"--n",
			"16",
			"--tol",
			"1e-2",
			"--method",
			"nprkc1",
			"prkc",
			"--out",
			str(out),
			"--format",
			"json",
			]

	assert main(argv) == 0
	assert [record["method"] for record in out.load_json()["records"]] == ["nprkc1", "prkc"]


def test_missing_reference(tmp_pathplus: PathPlus, capsys):
	argv = [
			"bench",
			"--problem",
			"ex5",
			"--n",
			"16",
			"--no-compute-ref",
			"--cache-dir",
			str(tmp_pathplus / "refs"),
			]

	assert main(argv) == 1
	assert "No cached reference" in capsys.readouterr().err


def test_config_file(tmp_pathplus: PathPlus):
	config_file = tmp_pathplus / "stabrkc.ini"
	config_file.write_lines(["[stabrkc]", "problem = linear", "method = nprkc1", "tol = 1e-3", "format = json"])
	out = tmp_pathplus / "run.json"

	assert main(["--config", str(config_file), "integrate", "--out", str(out)]) == 0

	data = out.load_json()
	assert data["method"] == "nprkc1"
	assert data["problem"] == "linear"
	assert data["tol"] == 1e-3


def test_environment(tmp_pathplus: PathPlus, monkeypatch):
	monkeypatch.setenv("STABRKC_PROBLEM", "linear")
	monkeypatch.setenv("STABRKC_FORMAT", "json")
	out = tmp_pathplus / "run.json"

	assert main(["integrate", "--method", "rk3", "--h", "0.1", "--out", str(out)]) == 0

	data = out.load_json()
	assert data["problem"] == "linear"
	assert data["mode"] == "fixed"
	assert len(data["trace"]) == 10


def test_command_required():
	with pytest.raises(SystemExit) as e:
		main([])

	assert e.value.code == 2


def test_parser_defaults():
	args = build_parser().parse_args(["bench"])
	assert args.no_compute_ref is None
	assert args.tol is None
	assert args.verbose == 0
