from __future__ import annotations

import math
from typing import List

from fairmas import constants
from fairmas.core.types import SimulationConfig
from fairmas.errors import ConfigError


_UNIT_FIELDS = (
	"bias_penalty_threshold",
	"bias_init_max",
	"resource_threshold",
	"coop_base_high",
	"coop_base_low",
	"propagation_rate",
	"redistribution_delta",
)
_NON_NEGATIVE_FIELDS = ("reward_cooperate", "reward_compete", "bias_penalty")


def _violation(constraint: str, field: str, actual: object, allowed: str) -> str:
	return f"{constraint} (field={field}, actual={actual!r}, allowed={allowed})"


def _finite(value: float) -> bool:
	return isinstance(value, (int, float)) and math.isfinite(value)


def collect_violations(config: SimulationConfig) -> List[str]:
	violations: List[str] = []
	if config.n_agents < 2:
		violations.append(_violation("n_agents ≥ 2", "n_agents", config.n_agents, "[2, inf)"))
	if config.n_rounds < 1:
		violations.append(_violation("n_rounds ≥ 1", "n_rounds", config.n_rounds, "[1, inf)"))
	if not 0 <= config.seed < 2**64:
		violations.append(_violation("seed is a 64-bit unsigned integer", "seed", config.seed, "[0, 2^64)"))
	for name in _NON_NEGATIVE_FIELDS:
		value = getattr(config, name)
		if not _finite(value) or value < 0:
			violations.append(_violation(f"{name} ≥ 0", name, value, "[0, inf)"))
	for name in _UNIT_FIELDS:
		value = getattr(config, name)
		if not _finite(value) or not 0.0 <= value <= 1.0:
			violations.append(_violation(f"{name} in [0, 1]", name, value, "[0, 1]"))
	if config.coop_base_high < config.coop_base_low:
		violations.append(
			_violation(
				"coop_base_high ≥ coop_base_low",
				"coop_base_high",
				config.coop_base_high,
				f"[{config.coop_base_low}, 1]",
			)
		)
	outside = sorted(agent_id for agent_id in config.adversarial_ids if not 0 <= agent_id < config.n_agents)
	if outside:
		violations.append(
			_violation("adversarial_ids within agent ids", "adversarial_ids", outside, f"[0, {config.n_agents})")
		)
	unknown = [name for name in config.interventions if name not in constants.INTERVENTION_NAMES]
	if unknown:
		violations.append(
			_violation(
				"interventions are known names",
				"interventions",
				unknown,
				"|".join(constants.INTERVENTION_NAMES),
			)
		)
	if config.group_totals not in {"mean", "sum"}:
		violations.append(_violation("group_totals is mean or sum", "group_totals", config.group_totals, "mean|sum"))
	params = config.incentive_params
	if params is not None:
		for name, value in params.as_dict().items():
			if not _finite(value) or value < 0:
				violations.append(_violation(f"incentive_params.{name} ≥ 0", f"incentive_params.{name}", value, "[0, inf)"))
	return violations


def validate_config(config: SimulationConfig) -> SimulationConfig:
	violations = collect_violations(config)
	if violations:
		raise ConfigError(f"Configuration has {len(violations)} violation(s).", evidence=violations)
	return config
