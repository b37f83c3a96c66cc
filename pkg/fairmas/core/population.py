from __future__ import annotations

from typing import List

from fairmas import constants
from fairmas.core.random_stream import RandomStream
from fairmas.core.types import AgentState, SimulationConfig


def init_population(config: SimulationConfig, rng: RandomStream) -> List[AgentState]:
	# Two draws per agent, group then bias, in ascending id order.
	weight = 1.0 / config.n_agents
	agents: List[AgentState] = []
	for agent_id in range(config.n_agents):
		group = constants.GROUP_LABELS[0] if rng.coin() else constants.GROUP_LABELS[1]
		bias = rng.uniform_between(0.0, config.bias_init_max)
		agents.append(
			AgentState(
				id=agent_id,
				group=group,
				bias=bias,
				weight=weight,
				strategy="adversarial" if agent_id in config.adversarial_ids else "honest",
			)
		)
	return agents
