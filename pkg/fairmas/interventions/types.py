from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Mapping, Sequence

from fairmas.core.types import GroupLabel
from fairmas.errors import InterventionError


RewardMap = Dict[int, float]


@dataclass(frozen=True)
class RoundContext:
	rewards: Mapping[int, float]
	groups: Mapping[int, GroupLabel]
	round: int = 0
	history: Sequence[object] = ()
	penalties: Mapping[int, bool] = field(default_factory=dict)

	def __post_init__(self) -> None:
		if set(self.rewards) != set(self.groups):
			missing = sorted(set(self.rewards) ^ set(self.groups))
			raise InterventionError(
				"Every agent id must appear in both rewards and groups.",
				evidence=[f"mismatched_ids={missing}"],
			)

	def with_rewards(self, rewards: Mapping[int, float]) -> "RoundContext":
		return RoundContext(
			rewards=dict(rewards),
			groups=self.groups,
			round=self.round,
			history=self.history,
			penalties=self.penalties,
		)

	def members(self) -> Dict[GroupLabel, List[int]]:
		grouped: Dict[GroupLabel, List[int]] = {}
		for agent_id in sorted(self.groups):
			grouped.setdefault(self.groups[agent_id], []).append(agent_id)
		return grouped

	def group_total(self, group: GroupLabel) -> float:
		return float(sum(self.rewards[agent_id] for agent_id in self.members().get(group, [])))


@dataclass(frozen=True)
class Intervention:
	name: str
	transform: Callable[[RoundContext], RewardMap]

	def __call__(self, ctx: RoundContext) -> RewardMap:
		result = self.transform(ctx)
		if set(result) != set(ctx.rewards):
			raise InterventionError(
				f"Intervention {self.name!r} changed the set of agent ids.",
				evidence=[f"before={sorted(ctx.rewards)}", f"after={sorted(result)}"],
			)
		return result


def identity_intervention() -> Intervention:
	return Intervention(name="identity", transform=lambda ctx: dict(ctx.rewards))
