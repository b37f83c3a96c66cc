"""Problem definition files (JSON).

::

	{
	  "agents": [{"name": "a0", "actions": ["x", "y"],
	              "weights": {"alpha": 1, "beta": 1, "gamma": 1}, "loss_weight": 0.5}],
	  "constraints": [{"name": "dp", "delta": 0.2}],
	  "profiles": [{"profile": ["x"], "outcomes": [[5, 1, 0]], "constraints": {"dp": 0.1}}]
	}

``profiles`` must enumerate every joint profile exactly once; ``outcomes`` holds
``[E, B, C]`` for each agent in order.
"""
from __future__ import annotations

import itertools
import json
from pathlib import Path
from typing import Dict, Tuple, Union

from pydantic import ValidationError

from fairmas.adapters.text_adapter import read_utf8
from fairmas.errors import ArtifactError, InputFormatError
from fairmas.optimizer.types import Constraint, OptimizationProblem, Profile, UtilityWeights
from fairmas.schemas import ProblemFileModel, validation_evidence


PathLike = Union[str, Path]


def parse_problem_text(text: str) -> ProblemFileModel:
	try:
		payload = json.loads(text)
	except json.JSONDecodeError as exc:
		raise InputFormatError(exc.msg, line_number=exc.lineno) from exc
	try:
		return ProblemFileModel.model_validate(payload)
	except ValidationError as exc:
		raise InputFormatError("Problem file does not match the schema.", evidence=validation_evidence(exc)) from exc


def load_problem_model(path: PathLike) -> ProblemFileModel:
	return parse_problem_text(read_utf8(path))


def problem_from_model(model: ProblemFileModel) -> OptimizationProblem:
	action_sets = tuple(tuple(agent.actions) for agent in model.agents)
	indices = [{label: index for index, label in enumerate(actions)} for actions in action_sets]
	constraint_names = [constraint.name for constraint in model.constraints]
	table: Dict[Profile, Tuple[Tuple[Tuple[float, float, float], ...], Dict[str, float]]] = {}

	for position, entry in enumerate(model.profiles):
		where = f"profiles[{position}]"
		if len(entry.profile) != len(action_sets):
			raise InputFormatError(f"{where}: profile names {len(entry.profile)} actions for {len(action_sets)} agents.")
		try:
			profile = tuple(indices[agent][label] for agent, label in enumerate(entry.profile))
		except KeyError as exc:
			raise InputFormatError(f"{where}: unknown action {exc.args[0]!r}.") from exc
		if profile in table:
			raise InputFormatError(f"{where}: duplicate profile {entry.profile}.")
		if len(entry.outcomes) != len(action_sets) or any(len(row) != 3 for row in entry.outcomes):
			raise InputFormatError(f"{where}: outcomes must hold [E, B, C] for every agent.")
		missing = [name for name in constraint_names if name not in entry.constraints]
		if missing:
			raise InputFormatError(f"{where}: missing constraint values {missing}.")
		outcomes = tuple((float(row[0]), float(row[1]), float(row[2])) for row in entry.outcomes)
		table[profile] = (outcomes, dict(entry.constraints))

	expected = set(itertools.product(*(range(len(actions)) for actions in action_sets)))
	absent = sorted(expected - set(table))
	if absent:
		labels = [[action_sets[agent][action] for agent, action in enumerate(profile)] for profile in absent[:5]]
		raise InputFormatError("Problem file does not enumerate every profile.", evidence=[f"missing={labels}"])

	loss_weights = None
	if any(agent.loss_weight is not None for agent in model.agents):
		loss_weights = tuple(agent.loss_weight if agent.loss_weight is not None else 0.0 for agent in model.agents)

	return OptimizationProblem(
		action_sets=action_sets,
		evaluator=lambda profile, agent: table[tuple(profile)][0][agent],
		weights=tuple(UtilityWeights(**agent.weights.model_dump()) for agent in model.agents),
		loss_weights=loss_weights,
		constraints=tuple(
			Constraint(
				name=constraint.name,
				value=lambda profile, name=constraint.name: table[tuple(profile)][1][name],
				delta=constraint.delta,
			)
			for constraint in model.constraints
		),
	)


def load_problem(path: PathLike) -> OptimizationProblem:
	return problem_from_model(load_problem_model(path))


def write_problem_model(model: ProblemFileModel, path: PathLike) -> Path:
	target = Path(path)
	try:
		target.parent.mkdir(parents=True, exist_ok=True)
		target.write_text(model.model_dump_json(indent=2) + "\n", encoding="utf-8")
	except OSError as exc:
		raise ArtifactError(f"Could not write {target}", evidence=[str(exc)]) from exc
	return target
