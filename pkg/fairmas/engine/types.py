from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Literal, Optional

from fairmas import constants
from fairmas.core.types import AgentState, GroupLabel, SimulationConfig
from fairmas.errors import MetricError


Action = Literal["cooperate", "compete"]


@dataclass(frozen=True)
class AgentRoundEntry:
	id: int
	group: GroupLabel
	action: Action
	raw_reward: float
	penalty_applied: bool
	adjusted_reward: float


@dataclass(frozen=True)
class RoundRecord:
	round: int
	resource: float
	per_agent: List[AgentRoundEntry]
	cumulative_by_group: Dict[GroupLabel, float]
	group_medians: Optional[Dict[GroupLabel, float]] = None


@dataclass
class SimulationResult:
	config: SimulationConfig
	rounds: List[RoundRecord]
	final_agents: List[AgentState]
	initial_agents: List[AgentState]
	cumulative_by_group_per_round: Dict[GroupLabel, List[float]] = field(default_factory=dict)

	def final_totals(self) -> Dict[GroupLabel, float]:
		return {group: (series[-1] if series else 0.0) for group, series in self.cumulative_by_group_per_round.items()}

	def populated_groups(self) -> List[GroupLabel]:
		return sorted({agent.group for agent in self.final_agents})

	@property
	def has_both_groups(self) -> bool:
		return all(label in self.populated_groups() for label in constants.GROUP_LABELS)

	def final_gap(self) -> float:
		"""Gap between the final group series; undefined when a group has no agents."""
		if not self.has_both_groups:
			raise MetricError(
				"Group reward gap needs exactly two groups.",
				evidence=[f"groups={self.populated_groups()}", f"seed={self.config.seed}"],
			)
		totals = self.final_totals()
		first, second = (totals[label] for label in constants.GROUP_LABELS)
		return abs(first - second)
