from __future__ import annotations

from typing import Dict, Sequence

import numpy as np

from fairmas import constants
from fairmas.core.types import AgentState, GroupLabel
from fairmas.errors import MetricError
from fairmas.metrics.types import AgentBiasContribution, SystemBiasReport


def system_bias(agents: Sequence[AgentState]) -> SystemBiasReport:
	"""Influence-weighted system bias, the sum of w_i * B_i."""
	if not agents:
		raise MetricError("System bias needs at least one agent.")
	weights = np.array([agent.weight for agent in agents], dtype=float)
	deviation = float(weights.sum() - 1.0)
	if abs(deviation) > constants.WEIGHT_TOLERANCE or (weights < 0).any():
		raise MetricError(
			"Agent weights are not normalized.",
			evidence=[f"sum_weights_minus_one={deviation!r}"],
		)
	per_agent = [
		AgentBiasContribution(
			id=agent.id,
			bias=agent.bias,
			weight=agent.weight,
			contribution=agent.weight * agent.bias,
		)
		for agent in agents
	]
	total = float(np.sum([item.contribution for item in per_agent]))
	return SystemBiasReport(per_agent=per_agent, total=total)


def group_totals(agents: Sequence[AgentState], *, per_capita: bool = False) -> Dict[GroupLabel, float]:
	members: Dict[GroupLabel, list] = {}
	for agent in agents:
		members.setdefault(agent.group, []).append(agent.cumulative_reward)
	if per_capita:
		return {group: float(np.mean(values)) for group, values in members.items()}
	return {group: float(np.sum(values)) for group, values in members.items()}


def group_reward_gap(agents: Sequence[AgentState], *, per_capita: bool = False) -> float:
	totals = group_totals(agents, per_capita=per_capita)
	if len(totals) != 2:
		raise MetricError(
			"Group reward gap needs exactly two groups.",
			evidence=[f"groups={sorted(totals)}"],
		)
	first, second = totals.values()
	return abs(first - second)
