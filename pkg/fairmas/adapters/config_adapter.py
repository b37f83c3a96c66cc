"""Simulation config files.

Format: one ``key = value`` per line, ``#`` starts a comment, blank lines are
ignored. ``adversarial_ids`` and ``interventions`` take comma-separated lists.
Keys are the :class:`~fairmas.core.types.SimulationConfig` field names plus
``fairness_bonus``, ``efficiency_penalty`` and ``efficiency_floor`` for the
incentive intervention.
"""
from __future__ import annotations

from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Union

from pydantic import ValidationError

from fairmas.adapters.text_adapter import decode_utf8
from fairmas.core.config import validate_config
from fairmas.core.types import IncentiveParams, SimulationConfig
from fairmas.errors import ConfigError, InputFormatError
from fairmas.schemas import ConfigFileModel, unknown_keys, validation_evidence


_LIST_KEYS = {"adversarial_ids", "interventions"}
_INCENTIVE_KEYS = ("fairness_bonus", "efficiency_penalty", "efficiency_floor")


def parse_config_text(text: str) -> Dict[str, Any]:
	values: Dict[str, Any] = {}
	for line_number, raw in enumerate(text.splitlines(), start=1):
		line = raw.split("#", 1)[0].strip()
		if not line:
			continue
		if "=" not in line:
			raise ConfigError(f"line {line_number}: expected 'key = value'.", evidence=[f"line={raw!r}"])
		key, value = (part.strip() for part in line.split("=", 1))
		if not key:
			raise ConfigError(f"line {line_number}: missing key.", evidence=[f"line={raw!r}"])
		if key in values:
			raise ConfigError(f"line {line_number}: duplicate key {key!r}.")
		if key in _LIST_KEYS:
			values[key] = [item.strip() for item in value.split(",") if item.strip()]
		else:
			values[key] = value
	return values


def config_from_mapping(values: Mapping[str, Any], base: Optional[SimulationConfig] = None) -> SimulationConfig:
	try:
		model = ConfigFileModel.model_validate(dict(values))
	except ValidationError as exc:
		extra = unknown_keys(exc)
		message = f"Unknown config key(s): {', '.join(extra)}." if extra else "Config values are invalid."
		raise ConfigError(message, evidence=validation_evidence(exc)) from exc

	overrides = model.model_dump(exclude_none=True)
	incentive = {key: overrides.pop(key) for key in _INCENTIVE_KEYS if key in overrides}
	base = base or SimulationConfig()
	if incentive:
		current = base.incentive_params or IncentiveParams()
		overrides["incentive_params"] = IncentiveParams(**{**current.as_dict(), **incentive})
	if "adversarial_ids" in overrides:
		overrides["adversarial_ids"] = frozenset(overrides["adversarial_ids"])
	if "interventions" in overrides:
		overrides["interventions"] = tuple(overrides["interventions"])
	return validate_config(base.with_overrides(**overrides))


def load_config(path: Union[str, Path], base: Optional[SimulationConfig] = None) -> SimulationConfig:
	config_path = Path(path)
	try:
		text = decode_utf8(config_path.read_bytes())
	except OSError as exc:
		raise ConfigError(f"Config file not readable: {config_path}", evidence=[str(exc)]) from exc
	except InputFormatError as exc:
		raise ConfigError(f"Config file {config_path}: {exc.message}", evidence=exc.evidence) from exc
	return config_from_mapping(parse_config_text(text), base)


def render_config_text(config: SimulationConfig) -> str:
	lines = []
	for key, value in config.as_dict().items():
		if key == "incentive_params":
			for name, number in (value or {}).items():
				lines.append(f"{name} = {number!r}")
			continue
		if isinstance(value, list):
			value = ",".join(str(item) for item in value)
		elif isinstance(value, bool):
			value = "true" if value else "false"
		lines.append(f"{key} = {value}")
	return "\n".join(lines) + "\n"
