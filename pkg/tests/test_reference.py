# 3rd party
import numpy
import pytest
from domdf_python_tools.paths import PathPlus

# this package
from stabrkc.errors import NonFiniteStateError, ReferenceMissingError
from stabrkc.problems import make_problem
from stabrkc.reference import DEFAULT_H_REF, DOPRI5_A, DOPRI5_B, ReferenceCache, ReferenceConfig, reference_solve


def test_tableau():
	assert sum(DOPRI5_B) == pytest.approx(1.0, rel=1e-15)

	for row in DOPRI5_A[1:]:
		assert len(row) == DOPRI5_A.index(row)

	# abscissae
	nodes = [sum(row) for row in DOPRI5_A]
	assert nodes == pytest.approx([0, 0.2, 0.3, 0.8, 8 / 9, 1.0])


class TestReferenceSolve:

	def test_matches_exact(self):
		ode = make_problem("ad1d", 64, A=0.1, D=1.0)
		y = reference_solve(ode)
		numpy.testing.assert_allclose(y, ode.exact(ode.T), rtol=0, atol=1e-10)

	def test_linear(self):
		ode = make_problem("linear")
		numpy.testing.assert_allclose(reference_solve(ode, 0.01), ode.exact(ode.T), rtol=0, atol=1e-10)

	def test_unstable_step(self):
		ode = make_problem("ad1d", 200, A=0.1, D=1.0)

		with pytest.raises(NonFiniteStateError) as excinfo:
			reference_solve(ode, 2.0**-10)

		assert excinfo.value.step is not None
		assert 0 <= excinfo.value.step < 103

	@pytest.mark.parametrize("h_ref", [0, -1e-3])
	def test_bad_step(self, h_ref: float):
		with pytest.raises(ValueError, match="'h_ref' must be positive"):
			reference_solve(make_problem("linear"), h_ref)


class TestReferenceConfig:

	def test_defaults(self):
		config = ReferenceConfig()
		assert config.h_ref == DEFAULT_H_REF == 2.0**-14
		assert config.method == "dopri5"

	def test_from_dict(self):
		assert ReferenceConfig.from_dict({"h_ref": "0.001"}).h_ref == 0.001

	def test_bad_h_ref(self):
		with pytest.raises(ValueError, match="must be positive"):
			ReferenceConfig(h_ref=0)

	def test_bad_method(self):
		with pytest.raises(ValueError, match="Unknown reference method"):
			ReferenceConfig(method="rk45")


class TestReferenceCache:

	key = {"problem": "linear", "params": {}, "N": None, "t0": 0.0, "T": 1.0, "h_ref": 0.01}

	def test_digest(self):
		reordered = dict(reversed(list(self.key.items())))
		assert ReferenceCache.digest(self.key) == ReferenceCache.digest(reordered)
		assert len(ReferenceCache.digest(self.key)) == 64
		assert ReferenceCache.digest(self.key) != ReferenceCache.digest({**self.key, "h_ref": 0.02})

	def test_store_and_load(self, tmp_pathplus: PathPlus):
		cache = ReferenceCache(tmp_pathplus / "cache")
		assert cache.load(self.key) is None

		y = numpy.array([0.25, -1.5, 3.0])
		path = cache.store(self.key, y)

		assert path.is_file()
		assert path.suffix == ".npy"
		assert path.with_suffix(".json").load_json() == self.key
		numpy.testing.assert_array_equal(cache.load(self.key), y)

	def test_get_computes_once(self, tmp_pathplus: PathPlus):
		cache = ReferenceCache(tmp_pathplus)
		ode = make_problem("linear")

		first = cache.get(self.key, ode, 0.01)
		assert cache.path_for(self.key).is_file()
		numpy.testing.assert_allclose(first, ode.exact(ode.T), atol=1e-10)

		cache.store(self.key, numpy.zeros(2))
		numpy.testing.assert_array_equal(cache.get(self.key, ode, 0.01), numpy.zeros(2))

	def test_missing(self, tmp_pathplus: PathPlus):
		cache = ReferenceCache(tmp_pathplus)

		with pytest.raises(ReferenceMissingError, match="No cached reference"):
			cache.get(self.key, make_problem("linear"), 0.01, compute=False)

		assert not any(tmp_pathplus.iterdir())

	def test_missing_is_file_not_found(self, tmp_pathplus: PathPlus):
		with pytest.raises(FileNotFoundError):
			ReferenceCache(tmp_pathplus).get(self.key, make_problem("linear"), compute=False)
