from __future__ import annotations

from typing import Tuple

from fairmas.core.random_stream import RandomStream
from fairmas.core.types import AgentState, EnvironmentState, SimulationConfig
from fairmas.engine.types import Action


def update_resource(rng: RandomStream) -> float:
	return rng.uniform()


def cooperate_probability(bias: float, resource: float, config: SimulationConfig) -> float:
	base = config.coop_base_high if resource > config.resource_threshold else config.coop_base_low
	return min(1.0, max(0.0, base - bias))


def decide_action(
	agent: AgentState,
	env: EnvironmentState,
	rng: RandomStream,
	config: SimulationConfig,
) -> Action:
	# Exactly one draw per decision, including the degenerate p=0 and p=1 cases.
	draw = rng.uniform()
	p = cooperate_probability(agent.bias, env.resource, config)
	return "cooperate" if draw < p else "compete"


def assign_reward(action: Action, bias: float, config: SimulationConfig) -> Tuple[float, bool]:
	base = config.reward_cooperate if action == "cooperate" else config.reward_compete
	if config.propagation_enabled and bias > config.bias_penalty_threshold:
		return base - config.bias_penalty, True
	return base, False
