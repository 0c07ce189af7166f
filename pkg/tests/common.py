# stdlib
from typing import Callable, List

# 3rd party
import numpy

# this package
from stabrkc.ode import SplitOde


def assemble_matrix(f: Callable[[numpy.ndarray], numpy.ndarray], dim: int) -> numpy.ndarray:
	"""
	Returns the matrix of the linear map ``f`` by applying it to the unit vectors.
	"""

	return numpy.column_stack([f(column) for column in numpy.eye(dim)])


def nearest_distances(values: numpy.ndarray, targets: numpy.ndarray) -> numpy.ndarray:
	"""
	For each of ``values``, the distance to the nearest of ``targets``.
	"""

	values = numpy.asarray(values).reshape(-1, 1)
	targets = numpy.asarray(targets).reshape(1, -1)
	return numpy.abs(values - targets).min(axis=1)


def scalar_ode(p: float, q: float) -> SplitOde:
	"""
	The test equation :math:`y' = p y + i q y` with :math:`h = 1`.
	"""

	return SplitOde(
			f_D=lambda y: p * y,
			f_A=lambda y: 1j * q * y,
			y0=numpy.array([1.0 + 0j]),
			)


class CountingField:
	"""
	Wraps a right-hand side and counts its evaluations.
	"""

	def __init__(self, f: Callable[[numpy.ndarray], numpy.ndarray]):
		self.f = f
		self.calls = 0

	def __call__(self, y: numpy.ndarray) -> numpy.ndarray:
		self.calls += 1
		return self.f(y)


def counting_ode(dim: int = 4) -> SplitOde:
	"""
	A small linear problem whose evaluators count their calls.
	"""

	rng = numpy.random.default_rng(1234)
	diffusion = -numpy.diag(rng.uniform(1, 5, dim))
	advection = rng.uniform(-1, 1, (dim, dim))

	return SplitOde(
			f_D=CountingField(lambda y: diffusion @ y),
			f_A=CountingField(lambda y: advection @ y),
			y0=numpy.ones(dim),
			)


def random_points(seed: int, count: int, p_range, q_range) -> List[tuple]:
	rng = numpy.random.default_rng(seed)
	ps = rng.uniform(*p_range, count)
	qs = rng.uniform(*q_range, count)
	return list(zip(ps, qs))
