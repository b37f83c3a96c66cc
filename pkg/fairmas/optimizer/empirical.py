from __future__ import annotations

from typing import Callable, Optional

import numpy as np

from fairmas import constants
from fairmas.engine.types import RoundRecord, SimulationResult


RoundLoss = Callable[[RoundRecord], float]


def round_group_gap(record: RoundRecord) -> float:
	"""Absolute difference of per-capita adjusted rewards between the two groups."""
	means = []
	for label in constants.GROUP_LABELS:
		values = [entry.adjusted_reward for entry in record.per_agent if entry.group == label]
		if not values:
			return 0.0
		means.append(float(np.mean(values)))
	return abs(means[0] - means[1])


def empirical_expected_loss(result: SimulationResult, loss: Optional[RoundLoss] = None) -> float:
	"""Mean of ``loss`` over the rounds of a finished run."""
	loss = loss or round_group_gap
	return float(np.mean([loss(record) for record in result.rounds]))


def fairness_constrained(result: SimulationResult, delta: float, loss: Optional[RoundLoss] = None) -> bool:
	return empirical_expected_loss(result, loss) <= delta
