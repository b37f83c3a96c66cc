from __future__ import annotations

import logging
from copy import deepcopy
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

import numpy as np

from fairmas import constants
from fairmas.core.config import validate_config
from fairmas.core.population import init_population
from fairmas.core.random_stream import RandomStream
from fairmas.core.types import AgentState, EnvironmentState, GroupLabel, SimulationConfig
from fairmas.engine.decisions import assign_reward, decide_action, update_resource
from fairmas.engine.dynamics import propagate_bias
from fairmas.engine.types import AgentRoundEntry, RoundRecord, SimulationResult
from fairmas.errors import ConfigError
from fairmas.interventions.adjustments import adversarial_report
from fairmas.interventions.pipeline import build_pipeline
from fairmas.interventions.types import Intervention, RoundContext


logger = logging.getLogger(__name__)


@dataclass
class SimulationState:
	config: SimulationConfig
	rng: RandomStream
	agents: List[AgentState]
	pipeline: Intervention
	env: EnvironmentState = field(default_factory=EnvironmentState)
	rounds: List[RoundRecord] = field(default_factory=list)
	series: Dict[GroupLabel, List[float]] = field(default_factory=dict)

	@classmethod
	def create(cls, config: SimulationConfig, agents: Optional[Sequence[AgentState]] = None) -> "SimulationState":
		validate_config(config)
		if agents is not None and len(agents) != config.n_agents:
			raise ConfigError(
				"Supplied population does not match n_agents.",
				evidence=[f"agents={len(agents)}", f"n_agents={config.n_agents}"],
			)
		rng = RandomStream(config.seed)
		population = [deepcopy(agent) for agent in agents] if agents is not None else init_population(config, rng)
		return cls(
			config=config,
			rng=rng,
			agents=sorted(population, key=lambda agent: agent.id),
			pipeline=build_pipeline(config),
			series={label: [] for label in constants.GROUP_LABELS},
		)

	@property
	def done(self) -> bool:
		return self.env.round >= self.config.n_rounds


def _penalty_input(agent: AgentState, config: SimulationConfig) -> float:
	if agent.is_adversarial:
		return adversarial_report(agent, config.bias_penalty_threshold)
	return agent.bias


def _group_increment(values: List[float], mode: str) -> float:
	if not values:
		return 0.0
	return float(np.mean(values)) if mode == "mean" else float(np.sum(values))


def step_round(state: SimulationState) -> RoundRecord:
	config = state.config
	if state.done:
		raise ConfigError(
			"Simulation already ran all configured rounds.",
			evidence=[f"round={state.env.round}", f"n_rounds={config.n_rounds}"],
		)
	round_index = state.env.round
	state.env.resource = update_resource(state.rng)

	actions = {}
	raw: Dict[int, float] = {}
	penalties: Dict[int, bool] = {}
	for agent in state.agents:
		action = decide_action(agent, state.env, state.rng, config)
		reward, penalized = assign_reward(action, _penalty_input(agent, config), config)
		actions[agent.id] = action
		raw[agent.id] = reward
		penalties[agent.id] = penalized

	groups = {agent.id: agent.group for agent in state.agents}
	group_medians = None
	if config.fairness_enabled:
		ctx = RoundContext(
			rewards=raw,
			groups=groups,
			round=round_index,
			history=tuple(state.rounds),
			penalties=penalties,
		)
		adjusted = state.pipeline(ctx)
		group_medians = {
			group: float(np.median([raw[agent_id] for agent_id in ids]))
			for group, ids in sorted(ctx.members().items())
		}
	else:
		adjusted = dict(raw)

	for agent in state.agents:
		agent.cumulative_reward += adjusted[agent.id]

	cumulative: Dict[GroupLabel, float] = {}
	for label in constants.GROUP_LABELS:
		values = [adjusted[agent.id] for agent in state.agents if agent.group == label]
		previous = state.series[label][-1] if state.series[label] else 0.0
		state.series[label].append(previous + _group_increment(values, config.group_totals))
		cumulative[label] = state.series[label][-1]

	record = RoundRecord(
		round=round_index,
		resource=state.env.resource,
		per_agent=[
			AgentRoundEntry(
				id=agent.id,
				group=agent.group,
				action=actions[agent.id],
				raw_reward=raw[agent.id],
				penalty_applied=penalties[agent.id],
				adjusted_reward=adjusted[agent.id],
			)
			for agent in state.agents
		],
		cumulative_by_group=cumulative,
		group_medians=group_medians,
	)
	state.rounds.append(record)

	if config.propagation_rate > 0:
		state.agents = propagate_bias(state.agents, config.propagation_rate)

	state.env.round += 1
	logger.debug("round %d resource=%.4f cumulative=%s", round_index, state.env.resource, cumulative)
	return record


def run_simulation(config: SimulationConfig, agents: Optional[Sequence[AgentState]] = None) -> SimulationResult:
	state = SimulationState.create(config, agents)
	initial = deepcopy(state.agents)
	while not state.done:
		step_round(state)
	result = SimulationResult(
		config=config,
		rounds=state.rounds,
		final_agents=state.agents,
		initial_agents=initial,
		cumulative_by_group_per_round={label: list(series) for label, series in state.series.items()},
	)
	logger.info(
		"simulation seed=%d fairness=%s rounds=%d final=%s",
		config.seed,
		config.fairness_enabled,
		config.n_rounds,
		result.final_totals(),
	)
	return result
