from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Any, Dict, FrozenSet, Literal, Optional, Tuple

from fairmas import constants


GroupLabel = str
Strategy = Literal["honest", "adversarial"]
GroupTotals = Literal["mean", "sum"]


@dataclass(frozen=True)
class IncentiveParams:
	fairness_bonus: float = constants.DEFAULT_FAIRNESS_BONUS
	efficiency_penalty: float = constants.DEFAULT_EFFICIENCY_PENALTY
	efficiency_floor: float = constants.DEFAULT_EFFICIENCY_FLOOR

	def as_dict(self) -> Dict[str, float]:
		return {
			"fairness_bonus": self.fairness_bonus,
			"efficiency_penalty": self.efficiency_penalty,
			"efficiency_floor": self.efficiency_floor,
		}


@dataclass
class AgentState:
	id: int
	group: GroupLabel
	bias: float
	weight: float
	strategy: Strategy = "honest"
	cumulative_reward: float = 0.0

	@property
	def is_adversarial(self) -> bool:
		return self.strategy == "adversarial"


@dataclass
class EnvironmentState:
	round: int = 0
	resource: float = 0.0


@dataclass(frozen=True)
class SimulationConfig:
	n_agents: int = constants.DEFAULT_N_AGENTS
	n_rounds: int = constants.DEFAULT_N_ROUNDS
	seed: int = constants.DEFAULT_SEED
	fairness_enabled: bool = True
	propagation_enabled: bool = True
	reward_cooperate: float = constants.DEFAULT_REWARD_COOPERATE
	reward_compete: float = constants.DEFAULT_REWARD_COMPETE
	bias_penalty: float = constants.DEFAULT_BIAS_PENALTY
	bias_penalty_threshold: float = constants.DEFAULT_BIAS_PENALTY_THRESHOLD
	bias_init_max: float = constants.DEFAULT_BIAS_INIT_MAX
	resource_threshold: float = constants.DEFAULT_RESOURCE_THRESHOLD
	coop_base_high: float = constants.DEFAULT_COOP_BASE_HIGH
	coop_base_low: float = constants.DEFAULT_COOP_BASE_LOW
	adversarial_ids: FrozenSet[int] = field(default_factory=frozenset)
	incentive_params: Optional[IncentiveParams] = None
	interventions: Tuple[str, ...] = constants.DEFAULT_INTERVENTIONS
	propagation_rate: float = constants.DEFAULT_PROPAGATION_RATE
	redistribution_delta: float = constants.DEFAULT_REDISTRIBUTION_DELTA
	group_totals: GroupTotals = constants.DEFAULT_GROUP_TOTALS  # type: ignore[assignment]

	def with_overrides(self, **overrides: Any) -> "SimulationConfig":
		return replace(self, **overrides)

	def as_dict(self) -> Dict[str, Any]:
		return {
			"n_agents": self.n_agents,
			"n_rounds": self.n_rounds,
			"seed": self.seed,
			"fairness_enabled": self.fairness_enabled,
			"propagation_enabled": self.propagation_enabled,
			"reward_cooperate": self.reward_cooperate,
			"reward_compete": self.reward_compete,
			"bias_penalty": self.bias_penalty,
			"bias_penalty_threshold": self.bias_penalty_threshold,
			"bias_init_max": self.bias_init_max,
			"resource_threshold": self.resource_threshold,
			"coop_base_high": self.coop_base_high,
			"coop_base_low": self.coop_base_low,
			"adversarial_ids": sorted(self.adversarial_ids),
			"incentive_params": self.incentive_params.as_dict() if self.incentive_params else None,
			"interventions": list(self.interventions),
			"propagation_rate": self.propagation_rate,
			"redistribution_delta": self.redistribution_delta,
			"group_totals": self.group_totals,
		}
