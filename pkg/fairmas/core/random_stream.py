"""Deterministic random streams.

Every run owns one ``RandomStream`` built on numpy's PCG64 generator. Batch runs
derive per-run seeds with :func:`mix_seed`, which hashes ``(base, index)`` through
``numpy.random.SeedSequence`` and keeps the first 64-bit word of its state. The
SeedSequence hash has full avalanche, so neighbouring indices yield unrelated
streams. Reproducibility is guaranteed within this implementation only.
"""
from __future__ import annotations

import numpy as np


_U64_MASK = (1 << 64) - 1


def mix_seed(base: int, index: int) -> int:
	sequence = np.random.SeedSequence([int(base) & _U64_MASK, int(index) & _U64_MASK])
	return int(sequence.generate_state(1, dtype=np.uint64)[0])


class RandomStream:
	def __init__(self, seed: int):
		self._seed = int(seed) & _U64_MASK
		self._generator = np.random.Generator(np.random.PCG64(self._seed))
		self._draws = 0

	@property
	def seed(self) -> int:
		return self._seed

	@property
	def draws(self) -> int:
		return self._draws

	def uniform(self) -> float:
		self._draws += 1
		return float(self._generator.random())

	def uniform_between(self, low: float, high: float) -> float:
		return low + (high - low) * self.uniform()

	def coin(self) -> bool:
		return self.uniform() < 0.5

	def integer(self, upper: int) -> int:
		"""Uniform integer in ``[0, upper)``."""
		self._draws += 1
		return int(self._generator.integers(0, upper))

	def spawn(self, index: int) -> "RandomStream":
		return RandomStream(mix_seed(self._seed, index))
