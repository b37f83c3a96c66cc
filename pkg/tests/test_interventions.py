from unittest import TestCase

import numpy as np

from fairmas.core.types import AgentState, IncentiveParams, SimulationConfig
from fairmas.errors import InterventionError
from fairmas.interventions.adjustments import (
	adversarial_report,
	corrective_redistribution,
	demographic_parity_median,
	incentive_adjustment,
)
from fairmas.interventions.pipeline import (
	build_pipeline,
	compose,
	incentive_intervention,
	median_intervention,
	redistribution_intervention,
)
from fairmas.interventions.types import Intervention, RoundContext, identity_intervention
from fairmas.metrics.types import BiasReport


def _ctx(rewards, groups, **kwargs):
	return RoundContext(rewards=dict(rewards), groups=dict(groups), **kwargs)


def _report(violated: bool) -> BiasReport:
	return BiasReport(metric_name="reward_share", gap=0.2, threshold=0.1, violated=violated, per_group={})


class MedianAdjustmentTests(TestCase):
	def test_odd_and_even_groups(self) -> None:
		ctx = _ctx({0: 10.0, 1: 5.0, 2: 10.0, 3: 10.0, 4: 5.0}, {0: "A", 1: "A", 2: "A", 3: "B", 4: "B"})
		self.assertEqual(demographic_parity_median(ctx), {0: 10.0, 1: 10.0, 2: 10.0, 3: 7.5, 4: 7.5})

	def test_equal_rewards_are_a_fixed_point(self) -> None:
		ctx = _ctx({0: 7.0, 1: 7.0, 2: 2.0}, {0: "A", 1: "A", 2: "B"})
		self.assertEqual(demographic_parity_median(ctx), dict(ctx.rewards))

	def test_idempotent_and_permutation_invariant(self) -> None:
		generator = np.random.default_rng(8)
		for _ in range(200):
			n = int(generator.integers(2, 10))
			rewards = {i: float(generator.choice([10.0, 7.0, 5.0, 2.0])) for i in range(n)}
			groups = {i: "AB"[int(generator.integers(0, 2))] for i in range(n)}
			once = demographic_parity_median(_ctx(rewards, groups))
			twice = demographic_parity_median(_ctx(once, groups))
			self.assertEqual(once, twice)

			order = list(generator.permutation(n))
			shuffled = {i: rewards[int(order[i])] for i in range(n)}
			shuffled_groups = {i: groups[int(order[i])] for i in range(n)}
			permuted = demographic_parity_median(_ctx(shuffled, shuffled_groups))
			for group in ("A", "B"):
				expected = {once[i] for i in range(n) if groups[i] == group}
				actual = {permuted[i] for i in range(n) if shuffled_groups[i] == group}
				self.assertEqual(expected, actual)


class IncentiveAdjustmentTests(TestCase):
	def test_bonus_for_compliance(self) -> None:
		ctx = _ctx({0: 10.0, 1: 5.0}, {0: "A", 1: "B"})
		adjusted = incentive_adjustment(ctx, IncentiveParams(fairness_bonus=1.0), {0: True, 1: True})
		self.assertEqual(adjusted, {0: 11.0, 1: 6.0})

	def test_neutral_parameters_are_identity(self) -> None:
		ctx = _ctx({0: 10.0, 1: 5.0}, {0: "A", 1: "B"})
		params = IncentiveParams(fairness_bonus=0.0, efficiency_penalty=0.0)
		self.assertEqual(incentive_adjustment(ctx, params, {0: True, 1: False}), {0: 10.0, 1: 5.0})

	def test_efficiency_penalty_below_floor(self) -> None:
		ctx = _ctx({0: 5.0, 1: 5.0}, {0: "A", 1: "B"})
		params = IncentiveParams(fairness_bonus=0.0, efficiency_penalty=2.0, efficiency_floor=20.0)
		self.assertEqual(incentive_adjustment(ctx, params, {0: True, 1: True}), {0: 3.0, 1: 3.0})

	def test_penalty_keeps_rewards_positive(self) -> None:
		ctx = _ctx({0: 1.0, 1: 1.0}, {0: "A", 1: "B"})
		params = IncentiveParams(fairness_bonus=0.0, efficiency_penalty=5.0, efficiency_floor=20.0)
		adjusted = incentive_adjustment(ctx, params, {0: True, 1: False})
		self.assertTrue(all(value > 0 for value in adjusted.values()))

	def test_missing_compliance_entry(self) -> None:
		ctx = _ctx({0: 10.0, 1: 5.0}, {0: "A", 1: "B"})
		with self.assertRaises(InterventionError):
			incentive_adjustment(ctx, IncentiveParams(), {0: True})

	def test_pipeline_compliance_follows_penalties(self) -> None:
		ctx = _ctx({0: 7.0, 1: 5.0}, {0: "A", 1: "B"}, penalties={0: True, 1: False})
		adjusted = incentive_intervention(IncentiveParams())(ctx)
		self.assertEqual(adjusted, {0: 7.0, 1: 6.0})


class CorrectiveRedistributionTests(TestCase):
	def test_midpoint_transfer(self) -> None:
		ctx = _ctx({0: 20.0, 1: 10.0, 2: 10.0, 3: 10.0}, {0: "A", 1: "A", 2: "B", 3: "B"})
		adjusted = corrective_redistribution(ctx, _report(True))
		self.assertEqual(adjusted[0] + adjusted[1], 25.0)
		self.assertEqual(adjusted[2] + adjusted[3], 25.0)

	def test_not_violated_is_identity(self) -> None:
		ctx = _ctx({0: 20.0, 1: 10.0}, {0: "A", 1: "B"})
		self.assertEqual(corrective_redistribution(ctx, _report(False)), {0: 20.0, 1: 10.0})

	def test_unequal_group_sizes(self) -> None:
		ctx = _ctx({0: 4.0, 1: 4.0, 2: 4.0, 3: 3.0, 4: 3.0}, {0: "A", 1: "A", 2: "A", 3: "B", 4: "B"})
		adjusted = corrective_redistribution(ctx, _report(True))
		self.assertEqual(adjusted, {0: 3.0, 1: 3.0, 2: 3.0, 3: 4.5, 4: 4.5})

	def test_requires_two_groups(self) -> None:
		ctx = _ctx({0: 4.0, 1: 4.0}, {0: "A", 1: "A"})
		with self.assertRaises(InterventionError):
			corrective_redistribution(ctx, _report(True))

	def test_conserves_total_and_equalizes_groups(self) -> None:
		generator = np.random.default_rng(10)
		for _ in range(1000):
			n = int(generator.integers(2, 13))
			groups = {i: "AB"[int(generator.integers(0, 2))] for i in range(n)}
			groups[0], groups[1] = "A", "B"
			rewards = {i: float(generator.uniform(0.0, 20.0)) for i in range(n)}
			ctx = _ctx(rewards, groups)
			adjusted = corrective_redistribution(ctx, _report(True))
			self.assertLessEqual(abs(sum(adjusted.values()) - sum(rewards.values())), 1e-9)
			after = ctx.with_rewards(adjusted)
			self.assertLessEqual(abs(after.group_total("A") - after.group_total("B")), 1e-9)

	def test_pipeline_gate_uses_reward_share(self) -> None:
		ctx = _ctx({0: 10.0, 1: 10.0, 2: 10.0}, {0: "A", 1: "A", 2: "B"})
		adjusted = redistribution_intervention(0.05)(ctx)
		self.assertEqual(adjusted[0] + adjusted[1], 15.0)
		self.assertEqual(adjusted[2], 15.0)
		balanced = _ctx({0: 5.0, 1: 5.0}, {0: "A", 1: "B"})
		self.assertEqual(redistribution_intervention(0.05)(balanced), {0: 5.0, 1: 5.0})

	def test_pipeline_skips_single_group(self) -> None:
		ctx = _ctx({0: 10.0, 1: 2.0}, {0: "A", 1: "A"})
		self.assertEqual(redistribution_intervention(0.0)(ctx), {0: 10.0, 1: 2.0})


class AdversarialReportTests(TestCase):
	def _agent(self, bias: float, strategy: str = "adversarial") -> AgentState:
		return AgentState(id=0, group="A", bias=bias, weight=1.0, strategy=strategy)

	def test_reports_just_under_threshold(self) -> None:
		self.assertAlmostEqual(adversarial_report(self._agent(0.25), 0.2), 0.19, places=12)

	def test_low_bias_is_reported_truthfully(self) -> None:
		self.assertEqual(adversarial_report(self._agent(0.05), 0.2), 0.05)

	def test_honest_agent_is_rejected(self) -> None:
		with self.assertRaises(InterventionError):
			adversarial_report(self._agent(0.25, strategy="honest"), 0.2)


class ComposeTests(TestCase):
	def _ctx(self):
		return _ctx({0: 10.0, 1: 5.0, 2: 10.0, 3: 5.0}, {0: "A", 1: "A", 2: "A", 3: "B"})

	def test_empty_is_identity(self) -> None:
		ctx = self._ctx()
		self.assertEqual(compose([])(ctx), dict(ctx.rewards))

	def test_identity_law_and_idempotence(self) -> None:
		ctx = self._ctx()
		median = median_intervention()
		self.assertEqual(compose([median, identity_intervention()])(ctx), median(ctx))
		self.assertEqual(compose([median, median])(ctx), median(ctx))
		self.assertEqual(compose([median, median]).name, "median,median")

	def test_dropping_an_id_is_rejected(self) -> None:
		broken = Intervention(name="drop", transform=lambda ctx: {0: 1.0})
		with self.assertRaises(InterventionError):
			compose([broken])(self._ctx())

	def test_context_ids_must_match(self) -> None:
		with self.assertRaises(InterventionError):
			RoundContext(rewards={0: 1.0, 1: 2.0}, groups={0: "A"})

	def test_build_pipeline_from_config(self) -> None:
		config = SimulationConfig(interventions=("median", "incentive", "redistribute"))
		self.assertEqual(build_pipeline(config).name, "median,incentive,redistribute")
		self.assertEqual(build_pipeline(SimulationConfig(interventions=())).name, "identity")
		with self.assertRaises(InterventionError):
			build_pipeline(SimulationConfig(interventions=("bogus",)))
