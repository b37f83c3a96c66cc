from unittest import TestCase

import numpy as np

from fairmas.core.config import collect_violations, validate_config
from fairmas.core.population import init_population
from fairmas.core.random_stream import RandomStream, mix_seed
from fairmas.core.types import IncentiveParams, SimulationConfig
from fairmas.errors import ConfigError


class ValidateConfigTests(TestCase):
	def test_default_config_is_valid(self) -> None:
		config = SimulationConfig()
		self.assertIs(validate_config(config), config)
		self.assertEqual(collect_violations(config), [])

	def test_single_agent_is_rejected(self) -> None:
		with self.assertRaises(ConfigError) as ctx:
			validate_config(SimulationConfig(n_agents=1))
		self.assertEqual(ctx.exception.code, "config_invalid")
		self.assertEqual(len(ctx.exception.evidence), 1)
		self.assertIn("n_agents ≥ 2", ctx.exception.evidence[0])
		self.assertIn("actual=1", ctx.exception.evidence[0])

	def test_coop_base_ordering(self) -> None:
		violations = collect_violations(SimulationConfig(coop_base_high=0.3, coop_base_low=0.8))
		self.assertEqual(len(violations), 1)
		self.assertIn("coop_base_high ≥ coop_base_low", violations[0])

	def test_all_violations_are_collected(self) -> None:
		config = SimulationConfig(
			n_agents=1,
			n_rounds=0,
			bias_init_max=1.5,
			reward_compete=-1.0,
			interventions=("median", "bogus"),
			incentive_params=IncentiveParams(fairness_bonus=-1.0),
		)
		violations = collect_violations(config)
		joined = "\n".join(violations)
		for field in ("n_agents", "n_rounds", "bias_init_max", "reward_compete", "interventions", "incentive_params.fairness_bonus"):
			self.assertIn(f"field={field}", joined)

	def test_adversarial_ids_must_be_agent_ids(self) -> None:
		violations = collect_violations(SimulationConfig(adversarial_ids=frozenset({3, 10})))
		self.assertEqual(len(violations), 1)
		self.assertIn("actual=[10]", violations[0])

	def test_with_overrides_keeps_other_fields(self) -> None:
		config = SimulationConfig(seed=7).with_overrides(fairness_enabled=False)
		self.assertEqual(config.seed, 7)
		self.assertFalse(config.fairness_enabled)
		self.assertEqual(config.as_dict()["adversarial_ids"], [])


class PopulationTests(TestCase):
	def test_default_population_shape(self) -> None:
		config = SimulationConfig()
		agents = init_population(config, RandomStream(0))
		self.assertEqual([agent.id for agent in agents], list(range(10)))
		for agent in agents:
			self.assertIn(agent.group, ("A", "B"))
			self.assertGreaterEqual(agent.bias, 0.0)
			self.assertLessEqual(agent.bias, 0.3)
			self.assertAlmostEqual(agent.weight, 0.1, places=12)
			self.assertEqual(agent.cumulative_reward, 0.0)
			self.assertEqual(agent.strategy, "honest")

	def test_zero_bias_interval(self) -> None:
		agents = init_population(SimulationConfig(bias_init_max=0.0), RandomStream(11))
		self.assertTrue(all(agent.bias == 0.0 for agent in agents))

	def test_same_seed_same_population(self) -> None:
		config = SimulationConfig()
		self.assertEqual(init_population(config, RandomStream(42)), init_population(config, RandomStream(42)))

	def test_adversarial_ids_set_strategy(self) -> None:
		agents = init_population(SimulationConfig(adversarial_ids=frozenset({2, 5})), RandomStream(3))
		self.assertEqual([agent.id for agent in agents if agent.is_adversarial], [2, 5])

	def test_population_invariants_over_many_seeds(self) -> None:
		config = SimulationConfig()
		for seed in range(1000):
			agents = init_population(config, RandomStream(seed))
			self.assertEqual(len(agents), 10)
			self.assertTrue(all(0.0 <= agent.bias <= 0.3 for agent in agents))
			self.assertTrue(all(agent.group in ("A", "B") for agent in agents))
			self.assertLessEqual(abs(sum(agent.weight for agent in agents) - 1.0), 1e-9)

	def test_group_assignment_is_balanced(self) -> None:
		config = SimulationConfig()
		counts = [
			sum(1 for agent in init_population(config, RandomStream(seed)) if agent.group == "A")
			for seed in range(10_000)
		]
		mean = float(np.mean(counts))
		self.assertGreaterEqual(mean, 4.8)
		self.assertLessEqual(mean, 5.2)


class RandomStreamTests(TestCase):
	def test_equal_seeds_give_equal_draws(self) -> None:
		first, second = RandomStream(123), RandomStream(123)
		self.assertEqual([first.uniform() for _ in range(10_000)], [second.uniform() for _ in range(10_000)])
		self.assertEqual(first.draws, 10_000)

	def test_draws_lie_in_unit_interval(self) -> None:
		stream = RandomStream(5)
		draws = [stream.uniform() for _ in range(10_000)]
		self.assertTrue(all(0.0 <= draw < 1.0 for draw in draws))

	def test_draws_pass_chi_square_uniformity(self) -> None:
		# 99% critical value of chi-square with 9 degrees of freedom.
		critical = 21.67
		statistics = []
		for seed in range(5):
			stream = RandomStream(seed)
			counts, _ = np.histogram([stream.uniform() for _ in range(10_000)], bins=10, range=(0.0, 1.0))
			self.assertEqual(int(counts.sum()), 10_000)
			statistics.append(float(np.sum((counts - 1_000) ** 2 / 1_000)))
		# A fair stream exceeds the critical value on one seed in a hundred.
		self.assertLessEqual(sum(value >= critical for value in statistics), 1, statistics)

	def test_integer_bounds(self) -> None:
		stream = RandomStream(9)
		values = {stream.integer(4) for _ in range(500)}
		self.assertEqual(values, {0, 1, 2, 3})

	def test_mix_seed_is_deterministic_and_spreads(self) -> None:
		self.assertEqual(mix_seed(0, 1), mix_seed(0, 1))
		seeds = {mix_seed(0, index) for index in range(200)}
		self.assertEqual(len(seeds), 200)
		self.assertTrue(all(0 <= seed < 2**64 for seed in seeds))
		self.assertNotEqual(mix_seed(0, 1), mix_seed(1, 0))

	def test_spawn_uses_mixed_seed(self) -> None:
		self.assertEqual(RandomStream(7).spawn(3).seed, mix_seed(7, 3))
