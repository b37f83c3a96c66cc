import tempfile
from pathlib import Path
from unittest import TestCase
from xml.etree import ElementTree

from fairmas.adapters.chart_adapter import build_chart_svg, chart_geometry, chart_series, write_chart_svg
from fairmas.adapters.config_adapter import config_from_mapping, load_config, parse_config_text, render_config_text
from fairmas.adapters.csv_adapter import (
	read_comparison_csv,
	read_outcome_csv,
	read_rounds_csv,
	write_comparison_csv,
	write_outcome_csv,
	write_rounds_csv,
)
from fairmas.adapters.problem_adapter import (
	load_problem,
	load_problem_model,
	parse_problem_text,
	problem_from_model,
	write_problem_model,
)
from fairmas.core.types import IncentiveParams, SimulationConfig
from fairmas.engine.simulation import run_simulation
from fairmas.errors import ArtifactError, ConfigError, InputFormatError
from fairmas.optimizer.search import solve_bruteforce


SVG_NS = "{http://www.w3.org/2000/svg}"

PROBLEM_TEXT = """{
  "agents": [
    {"name": "a0", "actions": ["x", "y"], "weights": {"alpha": 1, "beta": 1, "gamma": 1}},
    {"name": "a1", "actions": ["x", "y"], "loss_weight": 0.5}
  ],
  "constraints": [{"name": "dp", "delta": 0.2}],
  "profiles": [
    {"profile": ["x", "x"], "outcomes": [[1, 0, 0], [1, 0, 0]], "constraints": {"dp": 0.0}},
    {"profile": ["x", "y"], "outcomes": [[2, 0, 0], [9, 0, 0]], "constraints": {"dp": 0.5}},
    {"profile": ["y", "x"], "outcomes": [[3, 0, 0], [3, 1, 0]], "constraints": {"dp": 0.1}},
    {"profile": ["y", "y"], "outcomes": [[0, 0, 0], [0, 0, 0]], "constraints": {"dp": 0.0}}
  ]
}
"""


class ConfigAdapterTests(TestCase):
	def test_parse_comments_and_lists(self) -> None:
		text = "# experiment\nn_agents = 12\nadversarial_ids = 1, 3 # two cheaters\n\ninterventions = median,redistribute\n"
		values = parse_config_text(text)
		self.assertEqual(values, {"n_agents": "12", "adversarial_ids": ["1", "3"], "interventions": ["median", "redistribute"]})
		config = config_from_mapping(values)
		self.assertEqual(config.n_agents, 12)
		self.assertEqual(config.adversarial_ids, frozenset({1, 3}))
		self.assertEqual(config.interventions, ("median", "redistribute"))

	def test_unknown_key_is_named(self) -> None:
		with self.assertRaises(ConfigError) as ctx:
			config_from_mapping(parse_config_text("n_agents = 10\nn_agentz = 4\n"))
		self.assertIn("n_agentz", ctx.exception.message)

	def test_bad_value_and_bad_line(self) -> None:
		with self.assertRaises(ConfigError):
			config_from_mapping(parse_config_text("n_rounds = many\n"))
		with self.assertRaises(ConfigError) as ctx:
			parse_config_text("n_rounds = 3\nfairness_enabled\n")
		self.assertIn("line 2", ctx.exception.message)
		with self.assertRaises(ConfigError):
			parse_config_text("seed = 1\nseed = 2\n")

	def test_range_violations_surface_from_validation(self) -> None:
		with self.assertRaises(ConfigError) as ctx:
			config_from_mapping({"coop_base_high": "0.3", "coop_base_low": "0.8"})
		self.assertIn("coop_base_high ≥ coop_base_low", "\n".join(ctx.exception.evidence))

	def test_incentive_keys_build_params(self) -> None:
		config = config_from_mapping({"fairness_bonus": "2", "fairness_enabled": "off"})
		self.assertEqual(config.incentive_params, IncentiveParams(fairness_bonus=2.0))
		self.assertFalse(config.fairness_enabled)

	def test_undecodable_config_file(self) -> None:
		with tempfile.TemporaryDirectory() as tmp:
			source = Path(tmp) / "bad.cfg"
			source.write_bytes(b"n_agents = 4\nseed = \xff\n")
			with self.assertRaises(ConfigError) as ctx:
				load_config(source)
		self.assertIn("line 2", ctx.exception.message)

	def test_render_round_trip(self) -> None:
		config = SimulationConfig(
			seed=5,
			adversarial_ids=frozenset({0, 4}),
			interventions=("median", "incentive"),
			incentive_params=IncentiveParams(fairness_bonus=0.5),
			group_totals="sum",
		)
		self.assertEqual(config_from_mapping(parse_config_text(render_config_text(config))), config)
		self.assertEqual(config_from_mapping(parse_config_text(render_config_text(SimulationConfig()))), SimulationConfig())


class CsvAdapterTests(TestCase):
	def test_rounds_csv_round_trip(self) -> None:
		result = run_simulation(SimulationConfig(seed=4, n_rounds=5))
		with tempfile.TemporaryDirectory() as tmp:
			path = write_rounds_csv(result, Path(tmp) / "rounds.csv")
			rows = read_rounds_csv(path)
			raw = path.read_bytes()
		self.assertEqual(len(rows), 50)
		self.assertNotIn(b"\r\n", raw)
		self.assertTrue(raw.startswith(b"round,resource,agent_id,group,action,raw_reward,penalty_applied,adjusted_reward,cum_A,cum_B\n"))
		flat = [(record, entry) for record in result.rounds for entry in record.per_agent]
		for row, (record, entry) in zip(rows, flat):
			self.assertEqual(row["round"], record.round)
			self.assertEqual(row["resource"], record.resource)
			self.assertEqual(row["agent_id"], entry.id)
			self.assertEqual(row["action"], entry.action)
			self.assertEqual(row["raw_reward"], entry.raw_reward)
			self.assertEqual(row["penalty_applied"], entry.penalty_applied)
			self.assertEqual(row["adjusted_reward"], entry.adjusted_reward)
			self.assertEqual(row["cum_A"], record.cumulative_by_group["A"])

	def test_comparison_round_trip(self) -> None:
		rows = [{"condition": "FairnessOn", "seed_index": 0, "seed": 2**63 + 5, "final_A": 375.5, "final_B": 370.25, "gap": 5.25}]
		with tempfile.TemporaryDirectory() as tmp:
			path = write_comparison_csv(rows, Path(tmp) / "comparison.csv")
			self.assertEqual(read_comparison_csv(path), rows)

	def test_outcome_csv_round_trip(self) -> None:
		with tempfile.TemporaryDirectory() as tmp:
			source = Path(tmp) / "outcomes.csv"
			source.write_text("y_hat,y,attribute\n1,1,A\n0,1,B\n1,0,B\n", encoding="utf-8")
			table = read_outcome_csv(source)
			copy = write_outcome_csv(table, Path(tmp) / "copy.csv")
			self.assertEqual(read_outcome_csv(copy).rows(), table.rows())
		self.assertEqual(len(table), 3)
		self.assertEqual(table.groups(), ["A", "B"])

	def test_malformed_row_cites_line(self) -> None:
		lines = ["y_hat,y,attribute"] + ["1,0,A"] * 5 + ["1,x,A", "0,0,B"]
		with tempfile.TemporaryDirectory() as tmp:
			source = Path(tmp) / "outcomes.csv"
			source.write_text("\n".join(lines) + "\n", encoding="utf-8")
			with self.assertRaises(InputFormatError) as ctx:
				read_outcome_csv(source)
		self.assertEqual(ctx.exception.line_number, 7)
		self.assertIn("line 7", ctx.exception.message)

	def test_bad_header_and_missing_file(self) -> None:
		with tempfile.TemporaryDirectory() as tmp:
			source = Path(tmp) / "outcomes.csv"
			source.write_text("pred,truth,group\n1,1,A\n", encoding="utf-8")
			with self.assertRaises(InputFormatError) as ctx:
				read_outcome_csv(source)
			self.assertEqual(ctx.exception.line_number, 1)
			with self.assertRaises(ArtifactError):
				read_outcome_csv(Path(tmp) / "absent.csv")

	def test_undecodable_bytes_cite_line(self) -> None:
		with tempfile.TemporaryDirectory() as tmp:
			source = Path(tmp) / "outcomes.csv"
			source.write_bytes(b"y_hat,y,attribute\n1,1,A\n1,1,\xff\xfe\n")
			with self.assertRaises(InputFormatError) as ctx:
				read_outcome_csv(source)
		self.assertEqual(ctx.exception.line_number, 3)
		self.assertIn("UTF-8", ctx.exception.message)


class ProblemAdapterTests(TestCase):
	def test_solve_loaded_problem(self) -> None:
		problem = problem_from_model(parse_problem_text(PROBLEM_TEXT))
		self.assertEqual(problem.loss_weights, (0.0, 0.5))
		result = solve_bruteforce(problem)
		self.assertEqual(result.labels, ["y", "x"])
		self.assertEqual(result.value, 5.0)

	def test_round_trip_is_lossless(self) -> None:
		model = parse_problem_text(PROBLEM_TEXT)
		with tempfile.TemporaryDirectory() as tmp:
			path = write_problem_model(model, Path(tmp) / "problem.json")
			self.assertEqual(load_problem_model(path), model)
			self.assertEqual(solve_bruteforce(load_problem(path)).profile, (1, 0))

	def test_missing_profile_is_rejected(self) -> None:
		text = PROBLEM_TEXT.replace(',\n    {"profile": ["y", "y"], "outcomes": [[0, 0, 0], [0, 0, 0]], "constraints": {"dp": 0.0}}', "")
		with self.assertRaises(InputFormatError):
			problem_from_model(parse_problem_text(text))

	def test_schema_and_syntax_errors(self) -> None:
		with self.assertRaises(InputFormatError) as ctx:
			parse_problem_text('{"agents": [],\n "profiles": [}')
		self.assertEqual(ctx.exception.line_number, 2)
		with self.assertRaises(InputFormatError):
			parse_problem_text('{"agents": [{"name": "a", "actions": ["x"]}], "profiles": [], "extra": 1}')

	def test_undecodable_problem_file(self) -> None:
		with tempfile.TemporaryDirectory() as tmp:
			source = Path(tmp) / "problem.json"
			source.write_bytes(b"{\n  \"agents\": \"\xe9\"\n}\n")
			with self.assertRaises(InputFormatError) as ctx:
				load_problem_model(source)
		self.assertEqual(ctx.exception.line_number, 2)


class ChartAdapterTests(TestCase):
	def _pair(self, n_rounds=50, seed=0):
		config = SimulationConfig(seed=seed, n_rounds=n_rounds)
		return run_simulation(config), run_simulation(config.with_overrides(fairness_enabled=False))

	def test_four_series_with_all_rounds(self) -> None:
		on, off = self._pair()
		root = ElementTree.fromstring(build_chart_svg(on, off))
		polylines = root.findall(f"{SVG_NS}polyline")
		self.assertEqual(len(polylines), 4)
		for polyline in polylines:
			self.assertEqual(len(polyline.get("points").split()), 50)
		dashed = [polyline for polyline in polylines if polyline.get("stroke-dasharray")]
		self.assertEqual(len(dashed), 2)
		self.assertTrue(all("fairness off" in polyline.get("data-series") for polyline in dashed))
		texts = [element.text for element in root.iter(f"{SVG_NS}text")]
		self.assertIn("Round", texts)
		self.assertIn("Cumulative group reward", texts)
		self.assertIn("Group A (fairness on)", texts)

	def test_single_round_is_valid(self) -> None:
		on, off = self._pair(n_rounds=1)
		with tempfile.TemporaryDirectory() as tmp:
			path = write_chart_svg(on, off, Path(tmp) / "figure.svg")
			root = ElementTree.parse(path).getroot()
		for polyline in root.findall(f"{SVG_NS}polyline"):
			self.assertEqual(len(polyline.get("points").split()), 1)

	def test_headroom(self) -> None:
		on, off = self._pair(seed=3)
		series = chart_series(on, off)
		top = max(max(item.values) for item in series)
		self.assertAlmostEqual(chart_geometry(series).y_max, top * 1.05, places=9)

	def test_mismatched_rounds(self) -> None:
		on, _ = self._pair(n_rounds=5)
		_, off = self._pair(n_rounds=6)
		with self.assertRaises(ArtifactError):
			build_chart_svg(on, off)
