from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from fairmas.errors import OptimizerError


Profile = Tuple[int, ...]
EvaluatorOutput = Tuple[float, float, float]
Evaluator = Callable[[Profile, int], EvaluatorOutput]
LossFn = Callable[[Profile, int], float]


@dataclass(frozen=True)
class UtilityWeights:
	alpha: float = 1.0
	beta: float = 1.0
	gamma: float = 1.0

	def __post_init__(self) -> None:
		for name in ("alpha", "beta", "gamma"):
			value = getattr(self, name)
			if not math.isfinite(value) or value < 0:
				raise OptimizerError(
					f"Utility weight {name} must be finite and >= 0.",
					evidence=[f"{name}={value!r}"],
				)

	def scaled(self, factor: float) -> "UtilityWeights":
		return UtilityWeights(alpha=self.alpha * factor, beta=self.beta * factor, gamma=self.gamma * factor)

	def as_dict(self) -> Dict[str, float]:
		return {"alpha": self.alpha, "beta": self.beta, "gamma": self.gamma}


@dataclass(frozen=True)
class Constraint:
	"""A bound ``value(profile) <= delta`` on a joint action profile."""

	name: str
	value: Callable[[Profile], float]
	delta: float


@dataclass(frozen=True)
class OptimizationProblem:
	action_sets: Tuple[Tuple[str, ...], ...]
	evaluator: Evaluator
	weights: Tuple[UtilityWeights, ...]
	loss_weights: Optional[Tuple[float, ...]] = None
	constraints: Tuple[Constraint, ...] = ()
	loss: Optional[LossFn] = None

	def __post_init__(self) -> None:
		if not self.action_sets:
			raise OptimizerError("A problem needs at least one agent.")
		empty = [index for index, actions in enumerate(self.action_sets) if not actions]
		if empty:
			raise OptimizerError("Every agent needs a non-empty action set.", evidence=[f"empty_agents={empty}"])
		if len(self.weights) != len(self.action_sets):
			raise OptimizerError(
				"One UtilityWeights entry is required per agent.",
				evidence=[f"agents={len(self.action_sets)}", f"weights={len(self.weights)}"],
			)
		if self.loss_weights is not None:
			if len(self.loss_weights) != len(self.action_sets):
				raise OptimizerError(
					"One loss weight is required per agent.",
					evidence=[f"agents={len(self.action_sets)}", f"loss_weights={len(self.loss_weights)}"],
				)
			if any(weight < 0 or not math.isfinite(weight) for weight in self.loss_weights):
				raise OptimizerError("Loss weights must be finite and >= 0.", evidence=[f"loss_weights={list(self.loss_weights)}"])

	@property
	def n_agents(self) -> int:
		return len(self.action_sets)

	@property
	def space_size(self) -> int:
		return math.prod(len(actions) for actions in self.action_sets)

	def effective_loss_weights(self) -> Tuple[float, ...]:
		if self.loss_weights is not None:
			return self.loss_weights
		return tuple(1.0 / self.n_agents for _ in self.action_sets)

	def labels(self, profile: Profile) -> List[str]:
		return [self.action_sets[agent][action] for agent, action in enumerate(profile)]

	def check_profile(self, profile: Sequence[int]) -> Profile:
		if len(profile) != self.n_agents or any(
			not 0 <= action < len(actions) for action, actions in zip(profile, self.action_sets)
		):
			raise OptimizerError("Profile does not index the problem's action sets.", evidence=[f"profile={list(profile)}"])
		return tuple(profile)


@dataclass(frozen=True)
class NormalFormGame:
	strategy_sets: Tuple[Tuple[str, ...], ...]
	payoff: Callable[[Profile], Sequence[float]]

	@property
	def n_players(self) -> int:
		return len(self.strategy_sets)

	@property
	def space_size(self) -> int:
		return math.prod(len(strategies) for strategies in self.strategy_sets)

	def labels(self, profile: Profile) -> List[str]:
		return [self.strategy_sets[player][strategy] for player, strategy in enumerate(profile)]


@dataclass
class SolveResult:
	method: str
	profile: Optional[Profile]
	value: Optional[float]
	feasible: bool
	evaluated: int = 0
	labels: List[str] = field(default_factory=list)

	def as_dict(self) -> Dict[str, Any]:
		return {
			"method": self.method,
			"feasible": self.feasible,
			"profile": list(self.profile) if self.profile is not None else None,
			"labels": list(self.labels),
			"value": self.value,
			"evaluated": self.evaluated,
		}
