from __future__ import annotations

import logging
from typing import Sequence

from fairmas.core.types import IncentiveParams, SimulationConfig
from fairmas.errors import InterventionError
from fairmas.interventions.adjustments import (
	corrective_redistribution,
	demographic_parity_median,
	incentive_adjustment,
)
from fairmas.interventions.types import Intervention, RewardMap, RoundContext, identity_intervention
from fairmas.metrics.fairness import reward_share_report


logger = logging.getLogger(__name__)


def compose(interventions: Sequence[Intervention]) -> Intervention:
	"""Apply interventions left to right, each one reading the previous output."""
	steps = list(interventions)
	if not steps:
		return identity_intervention()

	def _apply(ctx: RoundContext) -> RewardMap:
		current = ctx
		for step in steps:
			current = current.with_rewards(step(current))
		return dict(current.rewards)

	return Intervention(name=",".join(step.name for step in steps), transform=_apply)


def median_intervention() -> Intervention:
	return Intervention(name="median", transform=demographic_parity_median)


def incentive_intervention(params: IncentiveParams) -> Intervention:
	def _apply(ctx: RoundContext) -> RewardMap:
		# Compliant means the agent did not incur the bias penalty this round.
		compliance = {agent_id: not ctx.penalties.get(agent_id, False) for agent_id in ctx.rewards}
		return incentive_adjustment(ctx, params, compliance)

	return Intervention(name="incentive", transform=_apply)


def redistribution_intervention(delta: float) -> Intervention:
	def _apply(ctx: RoundContext) -> RewardMap:
		if len(ctx.members()) != 2:
			logger.debug("round %d: single group present, redistribution skipped", ctx.round)
			return dict(ctx.rewards)
		report = reward_share_report(ctx.rewards, ctx.groups, delta)
		return corrective_redistribution(ctx, report)

	return Intervention(name="redistribute", transform=_apply)


def build_pipeline(config: SimulationConfig) -> Intervention:
	steps = []
	for name in config.interventions:
		if name == "median":
			steps.append(median_intervention())
		elif name == "incentive":
			steps.append(incentive_intervention(config.incentive_params or IncentiveParams()))
		elif name == "redistribute":
			steps.append(redistribution_intervention(config.redistribution_delta))
		else:
			raise InterventionError(f"Unknown intervention {name!r}.")
	return compose(steps)
