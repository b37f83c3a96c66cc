from __future__ import annotations

import json
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from fairmas import constants
from fairmas.adapters import chart_adapter, csv_adapter
from fairmas.core.random_stream import mix_seed
from fairmas.core.types import SimulationConfig
from fairmas.engine.simulation import run_simulation
from fairmas.engine.types import SimulationResult
from fairmas.errors import ArtifactError, ConfigError
from fairmas.schemas import BatchFile, BatchSummary, RunSummary


logger = logging.getLogger(__name__)

PathLike = Union[str, Path]
CONDITIONS = {"FairnessOn": True, "FairnessOff": False}


@dataclass(frozen=True)
class SeedOutcome:
	seed_index: int
	seed: int
	final_totals: Dict[str, float]
	gap: Optional[float]


@dataclass
class ReproduceReport:
	seeds: List[int]
	summaries: List[BatchSummary]
	first_runs: Dict[str, SimulationResult]
	artifacts: Dict[str, str] = field(default_factory=dict)

	@property
	def fairness_reduces_gap(self) -> Optional[bool]:
		"""Whether the fairness-on mean gap is strictly below the fairness-off one; None when undefined."""
		by_condition = {summary.condition: summary for summary in self.summaries}
		on, off = by_condition["FairnessOn"].mean_gap, by_condition["FairnessOff"].mean_gap
		if on is None or off is None:
			return None
		return on < off

	def lines(self) -> List[str]:
		by_condition = {summary.condition: summary for summary in self.summaries}
		output = []
		for condition, label in (("FairnessOn", "ON"), ("FairnessOff", "OFF")):
			summary = by_condition[condition]
			totals = self.first_runs[condition].final_totals()
			skipped = f", {len(summary.single_group_seeds)} single-group seed(s) skipped" if summary.single_group_seeds else ""
			output.append(
				f"fairness {label}: gap={_fmt_gap(summary.mean_gap)} (mean over {summary.n_seeds} seeds{skipped}, "
				f"median {_fmt_gap(summary.median_gap)}); seed 0 totals A={totals.get('A', 0.0):.2f} B={totals.get('B', 0.0):.2f}"
			)
		ratio = by_condition["FairnessOn"].gap_reduction_ratio
		output.append(f"gap reduction ratio (on/off): {ratio:.3f}" if ratio is not None else "gap reduction ratio (on/off): n/a")
		if self.fairness_reduces_gap is False:
			output.append("WARNING: fairness ON mean gap is not below fairness OFF mean gap for this configuration")
		for label, example in (("ON", constants.REFERENCE_EXAMPLE_ON), ("OFF", constants.REFERENCE_EXAMPLE_OFF)):
			output.append(
				f"paper example fairness {label}: A={example['A']:.0f} B={example['B']:.0f} gap={abs(example['A'] - example['B']):.0f}"
			)
		return output


def _fmt_gap(value: Optional[float]) -> str:
	return f"{value:.3f}" if value is not None else "n/a"


def derive_seeds(base_seed: int, n_seeds: int) -> List[int]:
	if n_seeds < 1:
		raise ConfigError("At least one seed is required.", evidence=[f"n_seeds={n_seeds}"])
	return [mix_seed(base_seed, index) for index in range(n_seeds)]


def _dump_json(payload: Dict[str, Any], path: PathLike) -> Path:
	target = Path(path)
	try:
		target.parent.mkdir(parents=True, exist_ok=True)
		target.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8")
	except OSError as exc:
		raise ArtifactError(f"Could not write {target}", evidence=[str(exc)]) from exc
	return target


def _final_gap(result: SimulationResult) -> Optional[float]:
	return float(result.final_gap()) if result.has_both_groups else None


def summarize_run(result: SimulationResult) -> RunSummary:
	config = result.config
	return RunSummary(
		seed=config.seed,
		fairness_enabled=config.fairness_enabled,
		n_rounds=config.n_rounds,
		group_totals=config.group_totals,
		final_totals={group: float(value) for group, value in sorted(result.final_totals().items())},
		final_gap=_final_gap(result),
		final_agent_rewards={str(agent.id): float(agent.cumulative_reward) for agent in result.final_agents},
		config=config.as_dict(),
	)


def run_to_directory(config: SimulationConfig, out_dir: PathLike) -> Tuple[RunSummary, Dict[str, str]]:
	result = run_simulation(config)
	summary = summarize_run(result)
	out = Path(out_dir)
	rounds_path = csv_adapter.write_rounds_csv(result, out / constants.ROUNDS_CSV)
	summary_path = _dump_json(summary.model_dump(), out / constants.SUMMARY_JSON)
	logger.info("run written to %s", out)
	return summary, {"rounds_csv": str(rounds_path), "summary_json": str(summary_path)}


def _run_seed(config: SimulationConfig, seed_index: int, seed: int) -> SeedOutcome:
	result = run_simulation(config.with_overrides(seed=seed))
	return SeedOutcome(
		seed_index=seed_index,
		seed=seed,
		final_totals={group: float(value) for group, value in result.final_totals().items()},
		gap=_final_gap(result),
	)


def run_seeds(config: SimulationConfig, seeds: Sequence[int], *, workers: int = constants.DEFAULT_WORKERS) -> List[SeedOutcome]:
	"""Run one simulation per seed; output order follows ``seeds`` regardless of scheduling."""
	jobs = list(enumerate(seeds))
	if workers <= 1 or len(jobs) == 1:
		return [_run_seed(config, index, seed) for index, seed in jobs]
	with ThreadPoolExecutor(max_workers=workers) as executor:
		return list(executor.map(lambda job: _run_seed(config, job[0], job[1]), jobs))


def _summary(condition: str, outcomes: Sequence[SeedOutcome]) -> BatchSummary:
	"""Aggregate per-seed gaps; seeds whose population landed in a single group carry a null gap."""
	gaps = [outcome.gap for outcome in outcomes]
	defined = [gap for gap in gaps if gap is not None]
	skipped = [outcome.seed_index for outcome in outcomes if outcome.gap is None]
	if skipped:
		logger.warning("%s: %d single-group seed(s) left out of the gap statistics: %s", condition, len(skipped), skipped)
	return BatchSummary(
		n_seeds=len(outcomes),
		condition=condition,  # type: ignore[arg-type]
		seeds=[outcome.seed for outcome in outcomes],
		per_seed_final_gaps=gaps,
		single_group_seeds=skipped,
		mean_gap=float(np.mean(defined)) if defined else None,
		median_gap=float(np.median(defined)) if defined else None,
	)


def _with_ratio(summaries: List[BatchSummary]) -> List[BatchSummary]:
	by_condition = {summary.condition: summary for summary in summaries}
	if set(by_condition) != set(CONDITIONS):
		return summaries
	on, off = by_condition["FairnessOn"].mean_gap, by_condition["FairnessOff"].mean_gap
	ratio = on / off if on is not None and off is not None and off > 0 else None
	return [summary.model_copy(update={"gap_reduction_ratio": ratio}) for summary in summaries]


def run_conditions(
	config: SimulationConfig,
	seeds: Sequence[int],
	conditions: Sequence[str],
	*,
	workers: int = constants.DEFAULT_WORKERS,
) -> Dict[str, List[SeedOutcome]]:
	unknown = [name for name in conditions if name not in CONDITIONS]
	if unknown or not conditions:
		raise ConfigError("Conditions must be FairnessOn and/or FairnessOff.", evidence=[f"conditions={list(conditions)}"])
	outcomes = {}
	for condition in conditions:
		condition_config = config.with_overrides(fairness_enabled=CONDITIONS[condition])
		outcomes[condition] = run_seeds(condition_config, seeds, workers=workers)
		logger.info("%s: %d seeds done", condition, len(seeds))
	return outcomes


def batch(
	config: SimulationConfig,
	n_seeds: int,
	conditions: Sequence[str] = tuple(CONDITIONS),
	*,
	workers: int = constants.DEFAULT_WORKERS,
) -> BatchFile:
	seeds = derive_seeds(config.seed, n_seeds)
	outcomes = run_conditions(config, seeds, conditions, workers=workers)
	summaries = _with_ratio([_summary(condition, outcomes[condition]) for condition in conditions])
	return BatchFile(base_seed=config.seed, config=config.as_dict(), summaries=summaries)


def batch_to_directory(
	config: SimulationConfig,
	n_seeds: int,
	out_dir: PathLike,
	conditions: Sequence[str] = tuple(CONDITIONS),
	*,
	workers: int = constants.DEFAULT_WORKERS,
) -> Tuple[BatchFile, str]:
	report = batch(config, n_seeds, conditions, workers=workers)
	path = _dump_json(report.model_dump(), Path(out_dir) / constants.BATCH_JSON)
	return report, str(path)


def reproduce(
	config: SimulationConfig,
	n_seeds: int,
	out_dir: PathLike,
	*,
	workers: int = constants.DEFAULT_WORKERS,
	pdf: bool = True,
) -> ReproduceReport:
	seeds = derive_seeds(config.seed, n_seeds)
	conditions = tuple(CONDITIONS)
	outcomes = run_conditions(config, seeds, conditions, workers=workers)
	summaries = _with_ratio([_summary(condition, outcomes[condition]) for condition in conditions])

	rows = []
	for condition in conditions:
		for outcome in outcomes[condition]:
			rows.append(
				{
					"condition": condition,
					"seed_index": outcome.seed_index,
					"seed": outcome.seed,
					"final_A": outcome.final_totals.get("A", 0.0),
					"final_B": outcome.final_totals.get("B", 0.0),
					"gap": outcome.gap,
				}
			)
	out = Path(out_dir)
	first_runs = {
		condition: run_simulation(config.with_overrides(seed=seeds[0], fairness_enabled=CONDITIONS[condition]))
		for condition in conditions
	}
	report = ReproduceReport(seeds=seeds, summaries=summaries, first_runs=first_runs)
	report.artifacts["comparison_csv"] = str(csv_adapter.write_comparison_csv(rows, out / constants.COMPARISON_CSV))
	report.artifacts["figure_svg"] = str(
		chart_adapter.write_chart_svg(first_runs["FairnessOn"], first_runs["FairnessOff"], out / constants.FIGURE_SVG)
	)
	if pdf:
		report.artifacts["figure_pdf"] = str(
			chart_adapter.write_chart_pdf(first_runs["FairnessOn"], first_runs["FairnessOff"], out / constants.FIGURE_PDF)
		)
	return report
