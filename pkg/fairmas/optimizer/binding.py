"""One simulation round expressed as an optimization problem.

Each agent chooses cooperate or compete. For agent i under a joint profile:
E is the reward the engine would pay, B is the agent's bias when it competes
(zero when it cooperates) and C is the agent's share of the demographic-parity
gap in cooperation between the two groups.
"""
from __future__ import annotations

from typing import Optional, Sequence, Tuple

from fairmas.core.types import AgentState, SimulationConfig
from fairmas.engine.decisions import assign_reward
from fairmas.metrics.fairness import demographic_parity_gap
from fairmas.metrics.types import OutcomeRow, OutcomeTable
from fairmas.optimizer.types import Constraint, OptimizationProblem, Profile, UtilityWeights


ROUND_ACTIONS: Tuple[str, str] = ("cooperate", "compete")


def cooperation_gap(agents: Sequence[AgentState], profile: Profile) -> float:
	if len({agent.group for agent in agents}) < 2:
		return 0.0
	rows = [
		OutcomeRow(y_hat=int(action == 0), y=int(action == 0), attribute=agent.group)
		for agent, action in zip(agents, profile)
	]
	return demographic_parity_gap(OutcomeTable.from_rows(rows))


def round_problem(
	agents: Sequence[AgentState],
	config: SimulationConfig,
	*,
	delta: Optional[float] = None,
	weights: Optional[Sequence[UtilityWeights]] = None,
) -> OptimizationProblem:
	population = sorted(agents, key=lambda agent: agent.id)
	n = len(population)

	def evaluator(profile: Profile, index: int) -> Tuple[float, float, float]:
		agent = population[index]
		action = ROUND_ACTIONS[profile[index]]
		reward, _ = assign_reward(action, agent.bias, config)
		bias = agent.bias if action == "compete" else 0.0
		return reward, bias, cooperation_gap(population, profile) / n

	constraints: Tuple[Constraint, ...] = ()
	if delta is not None:
		constraints = (Constraint(name="demographic_parity", value=lambda profile: cooperation_gap(population, profile), delta=delta),)
	return OptimizationProblem(
		action_sets=tuple(ROUND_ACTIONS for _ in population),
		evaluator=evaluator,
		weights=tuple(weights) if weights is not None else tuple(UtilityWeights() for _ in population),
		constraints=constraints,
	)
