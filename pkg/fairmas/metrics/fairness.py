from __future__ import annotations

from typing import Dict, Iterable, Mapping, Optional

import numpy as np

from fairmas.core.types import GroupLabel
from fairmas.errors import MetricError
from fairmas.metrics.types import METRIC_KINDS, BiasReport, MetricKind, OutcomeTable


def _check_groups(table: OutcomeTable, groups: Optional[Iterable[GroupLabel]]) -> list:
	if len(table) == 0:
		raise MetricError("Outcome table is empty.")
	present = table.groups()
	if groups is None:
		return present
	requested = sorted({str(group) for group in groups})
	missing = [group for group in requested if group not in present]
	if missing:
		raise MetricError(
			"Requested group has no rows in the outcome table.",
			evidence=[f"group={group}" for group in missing],
		)
	return requested


def _max_pairwise_gap(rates: Mapping[GroupLabel, float]) -> float:
	# max |r_a - r_b| over all pairs is the spread of the rates.
	if len(rates) < 2:
		return 0.0
	values = np.fromiter(rates.values(), dtype=float)
	return float(values.max() - values.min())


def positive_rates(table: OutcomeTable, groups: Optional[Iterable[GroupLabel]] = None) -> Dict[GroupLabel, float]:
	rates: Dict[GroupLabel, float] = {}
	for group in _check_groups(table, groups):
		mask = table.attribute == group
		rates[group] = float(table.y_hat[mask].mean())
	return rates


def _conditional_rates(
	table: OutcomeTable,
	*,
	y_value: int,
	label: str,
	groups: Optional[Iterable[GroupLabel]],
) -> Dict[GroupLabel, float]:
	rates: Dict[GroupLabel, float] = {}
	for group in _check_groups(table, groups):
		mask = (table.attribute == group) & (table.y == y_value)
		if not mask.any():
			raise MetricError(
				f"{label} is undefined for group {group}: no rows with Y={y_value}.",
				evidence=[f"group={group}"],
			)
		rates[group] = float(table.y_hat[mask].mean())
	return rates


def true_positive_rates(table: OutcomeTable, groups: Optional[Iterable[GroupLabel]] = None) -> Dict[GroupLabel, float]:
	return _conditional_rates(table, y_value=1, label="True-positive rate", groups=groups)


def false_positive_rates(table: OutcomeTable, groups: Optional[Iterable[GroupLabel]] = None) -> Dict[GroupLabel, float]:
	return _conditional_rates(table, y_value=0, label="False-positive rate", groups=groups)


def demographic_parity_gap(table: OutcomeTable, groups: Optional[Iterable[GroupLabel]] = None) -> float:
	return _max_pairwise_gap(positive_rates(table, groups))


def equalized_odds_gap(
	table: OutcomeTable,
	groups: Optional[Iterable[GroupLabel]] = None,
	*,
	include_fpr: bool = False,
) -> float:
	gap = _max_pairwise_gap(true_positive_rates(table, groups))
	if include_fpr:
		gap = max(gap, _max_pairwise_gap(false_positive_rates(table, groups)))
	return gap


def detect_bias(table: OutcomeTable, metric: MetricKind, threshold: float) -> BiasReport:
	if metric == "demographic_parity":
		per_group = positive_rates(table)
		gap = _max_pairwise_gap(per_group)
	elif metric == "equalized_odds":
		per_group = true_positive_rates(table)
		gap = _max_pairwise_gap(per_group)
	elif metric == "equalized_odds_two_sided":
		per_group = true_positive_rates(table)
		gap = equalized_odds_gap(table, include_fpr=True)
	else:
		raise MetricError(f"Unknown metric {metric!r}.", evidence=[f"allowed={'|'.join(METRIC_KINDS)}"])
	return BiasReport(
		metric_name=metric,
		gap=gap,
		threshold=float(threshold),
		violated=gap > threshold,
		per_group=per_group,
	)


def reward_share_report(
	rewards: Mapping[int, float],
	groups: Mapping[int, GroupLabel],
	threshold: float,
) -> BiasReport:
	"""Detect unequal reward totals between the two groups of one round.

	The gap is ``|T_a - T_b| / (T_a + T_b)``; per-group values are reward shares.
	"""
	totals: Dict[GroupLabel, float] = {}
	for agent_id, reward in rewards.items():
		group = groups[agent_id]
		totals[group] = totals.get(group, 0.0) + float(reward)
	if len(totals) != 2:
		raise MetricError(
			"Reward-share detection needs exactly two groups.",
			evidence=[f"groups={sorted(totals)}"],
		)
	grand = sum(totals.values())
	if grand == 0:
		shares = {group: 0.5 for group in totals}
	else:
		shares = {group: total / grand for group, total in totals.items()}
	first, second = sorted(shares)
	gap = abs(shares[first] - shares[second])
	return BiasReport(
		metric_name="reward_share",
		gap=gap,
		threshold=float(threshold),
		violated=gap > threshold,
		per_group=shares,
	)
