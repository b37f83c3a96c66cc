from __future__ import annotations

import math
from typing import Sequence

from fairmas.errors import OptimizerError
from fairmas.optimizer.types import EvaluatorOutput, OptimizationProblem


def _check_agent(problem: OptimizationProblem, agent: int) -> None:
	if not 0 <= agent < problem.n_agents:
		raise OptimizerError("Agent index out of range.", evidence=[f"agent={agent}", f"n_agents={problem.n_agents}"])


def evaluate(problem: OptimizationProblem, profile: Sequence[int], agent: int) -> EvaluatorOutput:
	profile = problem.check_profile(profile)
	_check_agent(problem, agent)
	efficiency, bias, violation = problem.evaluator(profile, agent)
	values = (float(efficiency), float(bias), float(violation))
	if not all(math.isfinite(value) for value in values):
		raise OptimizerError(
			"Evaluator returned a non-finite value.",
			evidence=[f"profile={list(profile)}", f"agent={agent}", f"outputs={list(values)}"],
		)
	return values


def utility(problem: OptimizationProblem, profile: Sequence[int], agent: int) -> float:
	"""alpha * E - beta * B - gamma * C for one agent under a joint profile."""
	efficiency, bias, violation = evaluate(problem, profile, agent)
	weights = problem.weights[agent]
	return weights.alpha * efficiency - weights.beta * bias - weights.gamma * violation


def aggregate_utility(problem: OptimizationProblem, profile: Sequence[int]) -> float:
	return float(sum(utility(problem, profile, agent) for agent in range(problem.n_agents)))


def agent_loss(problem: OptimizationProblem, profile: Sequence[int], agent: int) -> float:
	if problem.loss is not None:
		_check_agent(problem, agent)
		return float(problem.loss(problem.check_profile(profile), agent))
	return -utility(problem, profile, agent)


def weighted_loss(problem: OptimizationProblem, profile: Sequence[int]) -> float:
	weights = problem.effective_loss_weights()
	return float(sum(weights[agent] * agent_loss(problem, profile, agent) for agent in range(problem.n_agents)))


def feasible(problem: OptimizationProblem, profile: Sequence[int]) -> bool:
	checked = problem.check_profile(profile)
	return all(constraint.value(checked) <= constraint.delta for constraint in problem.constraints)
