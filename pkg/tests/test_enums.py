# 3rd party
import pytest

# this package
from stabrkc.enums import Boundary, Estimator, MethodId, OutputFormat


@pytest.mark.parametrize(
		"method, partitioned, chebyshev",
		[
				(MethodId.RKC, False, True),
				(MethodId.PRKC, True, True),
				(MethodId.ARKC, True, True),
				(MethodId.NPRKC, True, True),
				(MethodId.RK3, False, False),
				(MethodId.PRK3, False, False),
				(MethodId.MIDPOINT, False, False),
				(MethodId.RK4M, False, False),
				],
		)
def test_method_properties(method: MethodId, partitioned: bool, chebyshev: bool):
	assert method.is_partitioned is partitioned
	assert method.is_chebyshev is chebyshev


def test_method_from_string():
	assert MethodId("nprkc") is MethodId.NPRKC
	assert str(MethodId.MIDPOINT) == "midpoint"

	with pytest.raises(ValueError):
		MethodId("rk45")


def test_estimator():
	assert Estimator(1).order == 3
	assert Estimator(2).order == 2
	assert Estimator.VARIANT_2 == 2


def test_string_enums():
	assert Boundary("zero-flux") is Boundary.ZERO_FLUX
	assert OutputFormat("json") is OutputFormat.JSON
	assert OutputFormat.CSV == "csv"
