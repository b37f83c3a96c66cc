from __future__ import annotations

from typing import Any, Dict, List, Literal, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator


def validation_evidence(exc: ValidationError) -> List[str]:
	evidence = []
	for issue in exc.errors():
		loc = ".".join(str(part) for part in issue.get("loc", []))
		msg = issue.get("msg", "Invalid value.")
		evidence.append(f"{loc}: {msg}" if loc else msg)
	return evidence


def unknown_keys(exc: ValidationError) -> List[str]:
	return [
		".".join(str(part) for part in issue.get("loc", []))
		for issue in exc.errors()
		if issue.get("type") == "extra_forbidden"
	]


class ErrorModel(BaseModel):
	model_config = ConfigDict(extra="forbid")

	code: str
	message: str
	evidence: List[str] = Field(default_factory=list)


class Envelope(BaseModel):
	model_config = ConfigDict(extra="forbid")

	ok: bool
	generated_at: str
	data: Optional[Dict[str, Any]] = None
	report: Optional[Dict[str, Any]] = None
	error: Optional[ErrorModel] = None


class ConfigFileModel(BaseModel):
	"""Keys accepted in a ``key = value`` simulation config file."""

	model_config = ConfigDict(extra="forbid", str_strip_whitespace=True)

	n_agents: Optional[int] = None
	n_rounds: Optional[int] = None
	seed: Optional[int] = Field(default=None, ge=0)
	fairness_enabled: Optional[bool] = None
	propagation_enabled: Optional[bool] = None
	reward_cooperate: Optional[float] = None
	reward_compete: Optional[float] = None
	bias_penalty: Optional[float] = None
	bias_penalty_threshold: Optional[float] = None
	bias_init_max: Optional[float] = None
	resource_threshold: Optional[float] = None
	coop_base_high: Optional[float] = None
	coop_base_low: Optional[float] = None
	adversarial_ids: Optional[List[int]] = None
	interventions: Optional[List[str]] = None
	propagation_rate: Optional[float] = None
	redistribution_delta: Optional[float] = None
	group_totals: Optional[Literal["mean", "sum"]] = None
	fairness_bonus: Optional[float] = None
	efficiency_penalty: Optional[float] = None
	efficiency_floor: Optional[float] = None


class RunSummary(BaseModel):
	model_config = ConfigDict(extra="forbid")

	seed: int
	fairness_enabled: bool
	n_rounds: int
	group_totals: Literal["mean", "sum"]
	final_totals: Dict[str, float]
	# null when the population landed in a single group
	final_gap: Optional[float] = None
	final_agent_rewards: Dict[str, float]
	config: Dict[str, Any]


class BatchSummary(BaseModel):
	model_config = ConfigDict(extra="forbid")

	n_seeds: int = Field(..., ge=1)
	condition: Literal["FairnessOn", "FairnessOff"]
	seeds: List[int]
	per_seed_final_gaps: List[Optional[float]]
	single_group_seeds: List[int] = Field(default_factory=list)
	mean_gap: Optional[float] = None
	median_gap: Optional[float] = None
	gap_reduction_ratio: Optional[float] = None

	@model_validator(mode="after")
	def _consistent(self) -> "BatchSummary":
		if len(self.per_seed_final_gaps) != self.n_seeds or len(self.seeds) != self.n_seeds:
			raise ValueError("per_seed_final_gaps and seeds must have n_seeds entries")
		undefined = [index for index, gap in enumerate(self.per_seed_final_gaps) if gap is None]
		if undefined != self.single_group_seeds:
			raise ValueError("single_group_seeds must list the seed indices with a null gap")
		defined = [gap for gap in self.per_seed_final_gaps if gap is not None]
		if not defined:
			if self.mean_gap is not None or self.median_gap is not None:
				raise ValueError("mean_gap and median_gap must be null when no seed has both groups")
			return self
		if self.mean_gap is None or not np.isclose(self.mean_gap, float(np.mean(defined))):
			raise ValueError("mean_gap does not match per_seed_final_gaps")
		if self.median_gap is None or not np.isclose(self.median_gap, float(np.median(defined))):
			raise ValueError("median_gap does not match per_seed_final_gaps")
		return self


class BatchFile(BaseModel):
	model_config = ConfigDict(extra="forbid")

	base_seed: int
	config: Dict[str, Any]
	summaries: List[BatchSummary]


class BiasReportModel(BaseModel):
	model_config = ConfigDict(extra="forbid")

	metric_name: str
	gap: float
	threshold: float
	violated: bool
	per_group: Dict[str, float]


class WeightsModel(BaseModel):
	model_config = ConfigDict(extra="forbid")

	alpha: float = Field(default=1.0, ge=0)
	beta: float = Field(default=1.0, ge=0)
	gamma: float = Field(default=1.0, ge=0)


class ProblemAgentModel(BaseModel):
	model_config = ConfigDict(extra="forbid", str_strip_whitespace=True)

	name: str = Field(..., min_length=1)
	actions: List[str] = Field(..., min_length=1)
	weights: WeightsModel = Field(default_factory=WeightsModel)
	loss_weight: Optional[float] = Field(default=None, ge=0)


class ProblemConstraintModel(BaseModel):
	model_config = ConfigDict(extra="forbid", str_strip_whitespace=True)

	name: str = Field(..., min_length=1)
	delta: float


class ProblemProfileModel(BaseModel):
	"""Outcomes of one joint profile: ``[E, B, C]`` per agent plus constraint values."""

	model_config = ConfigDict(extra="forbid")

	profile: List[str]
	outcomes: List[List[float]]
	constraints: Dict[str, float] = Field(default_factory=dict)


class ProblemFileModel(BaseModel):
	model_config = ConfigDict(extra="forbid")

	agents: List[ProblemAgentModel] = Field(..., min_length=1)
	constraints: List[ProblemConstraintModel] = Field(default_factory=list)
	profiles: List[ProblemProfileModel]
