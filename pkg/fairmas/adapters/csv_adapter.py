from __future__ import annotations

import csv
import io
from pathlib import Path
from typing import Any, Dict, Iterable, List, Sequence, Union

from fairmas import constants
from fairmas.adapters.text_adapter import read_utf8
from fairmas.engine.types import SimulationResult
from fairmas.errors import ArtifactError, InputFormatError
from fairmas.metrics.types import OutcomeRow, OutcomeTable


PathLike = Union[str, Path]

COMPARISON_CSV_COLUMNS = ["condition", "seed_index", "seed", "final_A", "final_B", "gap"]


def _flag(value: bool) -> str:
	return "true" if value else "false"


def _write_rows(path: PathLike, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> Path:
	target = Path(path)
	try:
		target.parent.mkdir(parents=True, exist_ok=True)
		with target.open("w", encoding="utf-8", newline="") as handle:
			writer = csv.writer(handle, lineterminator="\n")
			writer.writerow(header)
			writer.writerows(rows)
	except OSError as exc:
		raise ArtifactError(f"Could not write {target}", evidence=[str(exc)]) from exc
	return target


def _read_rows(path: PathLike) -> List[Dict[str, str]]:
	return list(csv.DictReader(io.StringIO(read_utf8(path), newline="")))


def write_rounds_csv(result: SimulationResult, path: PathLike) -> Path:
	rows = []
	for record in result.rounds:
		cum_a = record.cumulative_by_group.get("A", 0.0)
		cum_b = record.cumulative_by_group.get("B", 0.0)
		for entry in record.per_agent:
			rows.append(
				[
					record.round,
					float(record.resource),
					entry.id,
					entry.group,
					entry.action,
					float(entry.raw_reward),
					_flag(entry.penalty_applied),
					float(entry.adjusted_reward),
					float(cum_a),
					float(cum_b),
				]
			)
	return _write_rows(path, constants.ROUNDS_CSV_COLUMNS, rows)


def read_rounds_csv(path: PathLike) -> List[Dict[str, Any]]:
	parsed = []
	for row in _read_rows(path):
		parsed.append(
			{
				"round": int(row["round"]),
				"resource": float(row["resource"]),
				"agent_id": int(row["agent_id"]),
				"group": row["group"],
				"action": row["action"],
				"raw_reward": float(row["raw_reward"]),
				"penalty_applied": row["penalty_applied"] == "true",
				"adjusted_reward": float(row["adjusted_reward"]),
				"cum_A": float(row["cum_A"]),
				"cum_B": float(row["cum_B"]),
			}
		)
	return parsed


def write_comparison_csv(rows: Sequence[Dict[str, Any]], path: PathLike) -> Path:
	return _write_rows(path, COMPARISON_CSV_COLUMNS, ([row[column] for column in COMPARISON_CSV_COLUMNS] for row in rows))


def read_comparison_csv(path: PathLike) -> List[Dict[str, Any]]:
	return [
		{
			"condition": row["condition"],
			"seed_index": int(row["seed_index"]),
			"seed": int(row["seed"]),
			"final_A": float(row["final_A"]),
			"final_B": float(row["final_B"]),
			"gap": float(row["gap"]) if row["gap"] else None,
		}
		for row in _read_rows(path)
	]


def _binary(value: str, column: str, line_number: int) -> int:
	if value.strip() not in ("0", "1"):
		raise InputFormatError(f"{column} must be 0 or 1.", line_number=line_number, evidence=[f"{column}={value!r}"])
	return int(value)


def read_outcome_csv(path: PathLike) -> OutcomeTable:
	"""Outcome table CSV with header ``y_hat,y,attribute``."""
	rows: List[OutcomeRow] = []
	with io.StringIO(read_utf8(path), newline="") as handle:
		reader = csv.reader(handle)
		header = next(reader, None)
		if header is None or [cell.strip() for cell in header] != constants.OUTCOME_CSV_COLUMNS:
			raise InputFormatError(
				f"header must be {','.join(constants.OUTCOME_CSV_COLUMNS)}.",
				line_number=1,
				evidence=[f"header={header!r}"],
			)
		for cells in reader:
			line_number = reader.line_num
			if not cells or all(not cell.strip() for cell in cells):
				continue
			if len(cells) != len(constants.OUTCOME_CSV_COLUMNS):
				raise InputFormatError(
					f"expected {len(constants.OUTCOME_CSV_COLUMNS)} fields, found {len(cells)}.",
					line_number=line_number,
				)
			attribute = cells[2].strip()
			if not attribute:
				raise InputFormatError("attribute is empty.", line_number=line_number)
			rows.append(
				OutcomeRow(
					y_hat=_binary(cells[0], "y_hat", line_number),
					y=_binary(cells[1], "y", line_number),
					attribute=attribute,
				)
			)
	if not rows:
		raise InputFormatError("outcome table has no data rows.", line_number=2)
	return OutcomeTable.from_rows(rows)


def write_outcome_csv(table: OutcomeTable, path: PathLike) -> Path:
	return _write_rows(path, constants.OUTCOME_CSV_COLUMNS, ([row.y_hat, row.y, row.attribute] for row in table.rows()))
