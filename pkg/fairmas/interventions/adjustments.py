from __future__ import annotations

from typing import Mapping

import numpy as np

from fairmas import constants
from fairmas.core.types import AgentState, IncentiveParams
from fairmas.errors import InterventionError
from fairmas.interventions.types import RewardMap, RoundContext
from fairmas.metrics.types import BiasReport


def demographic_parity_median(ctx: RoundContext) -> RewardMap:
	"""Give every agent its group's median reward for the round."""
	members = ctx.members()
	if not members:
		raise InterventionError("Median adjustment needs at least one non-empty group.")
	adjusted: RewardMap = {}
	for group, ids in members.items():
		median = float(np.median([ctx.rewards[agent_id] for agent_id in ids]))
		for agent_id in ids:
			adjusted[agent_id] = median
	return adjusted


def incentive_adjustment(
	ctx: RoundContext,
	params: IncentiveParams,
	compliance: Mapping[int, bool],
) -> RewardMap:
	missing = sorted(agent_id for agent_id in ctx.rewards if agent_id not in compliance)
	if missing:
		raise InterventionError("Compliance is missing for some agents.", evidence=[f"missing_ids={missing}"])
	total = float(sum(ctx.rewards.values()))
	inefficient = total < params.efficiency_floor
	adjusted: RewardMap = {}
	for agent_id, reward in ctx.rewards.items():
		value = reward + (params.fairness_bonus if compliance[agent_id] else 0.0)
		if inefficient and params.efficiency_penalty > 0:
			value = max(value - params.efficiency_penalty, constants.INCENTIVE_REWARD_FLOOR)
		adjusted[agent_id] = value
	return adjusted


def corrective_redistribution(ctx: RoundContext, report: BiasReport) -> RewardMap:
	"""Zero-sum transfer that equalizes the two group round-totals when bias is detected."""
	members = ctx.members()
	if len(members) != 2:
		raise InterventionError(
			"Corrective redistribution needs exactly two groups.",
			evidence=[f"groups={sorted(members)}"],
		)
	adjusted: RewardMap = dict(ctx.rewards)
	if not report.violated:
		return adjusted
	first, second = sorted(members, key=lambda group: (-ctx.group_total(group), group))
	transfer = (ctx.group_total(first) - ctx.group_total(second)) / 2.0
	if transfer <= 0:
		return adjusted
	pay = transfer / len(members[first])
	receive = transfer / len(members[second])
	for agent_id in members[first]:
		adjusted[agent_id] = ctx.rewards[agent_id] - pay
	for agent_id in members[second]:
		adjusted[agent_id] = ctx.rewards[agent_id] + receive
	return adjusted


def adversarial_report(agent: AgentState, threshold: float) -> float:
	"""Bias an adversarial agent reports to the penalty check.

	The report sits just under the threshold; the true bias keeps driving decisions.
	"""
	if not agent.is_adversarial:
		raise InterventionError(
			"adversarial_report called on an honest agent.",
			evidence=[f"agent_id={agent.id}", f"strategy={agent.strategy}"],
		)
	return max(0.0, min(agent.bias, threshold - constants.ADVERSARIAL_MARGIN))
