from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Literal, Sequence

import numpy as np

from fairmas.core.types import GroupLabel
from fairmas.errors import MetricError


MetricKind = Literal["demographic_parity", "equalized_odds", "equalized_odds_two_sided"]
METRIC_KINDS = ("demographic_parity", "equalized_odds", "equalized_odds_two_sided")


@dataclass(frozen=True)
class OutcomeRow:
	y_hat: int
	y: int
	attribute: GroupLabel


@dataclass(frozen=True)
class OutcomeTable:
	y_hat: np.ndarray
	y: np.ndarray
	attribute: np.ndarray

	@classmethod
	def from_rows(cls, rows: Sequence[OutcomeRow]) -> "OutcomeTable":
		if not rows:
			raise MetricError("Outcome table is empty.")
		for index, row in enumerate(rows):
			if row.y_hat not in (0, 1) or row.y not in (0, 1):
				raise MetricError(
					f"Row {index} has non-binary outcome.",
					evidence=[f"y_hat={row.y_hat!r}", f"y={row.y!r}"],
				)
		return cls(
			y_hat=np.array([row.y_hat for row in rows], dtype=np.int64),
			y=np.array([row.y for row in rows], dtype=np.int64),
			attribute=np.array([str(row.attribute) for row in rows], dtype=object),
		)

	def __len__(self) -> int:
		return int(self.y_hat.shape[0])

	def groups(self) -> List[GroupLabel]:
		return sorted({str(value) for value in self.attribute})

	def rows(self) -> List[OutcomeRow]:
		return [
			OutcomeRow(y_hat=int(a), y=int(b), attribute=str(c))
			for a, b, c in zip(self.y_hat, self.y, self.attribute)
		]


@dataclass(frozen=True)
class AgentBiasContribution:
	id: int
	bias: float
	weight: float
	contribution: float


@dataclass(frozen=True)
class SystemBiasReport:
	per_agent: List[AgentBiasContribution]
	total: float


@dataclass(frozen=True)
class BiasReport:
	metric_name: str
	gap: float
	threshold: float
	violated: bool
	per_group: Dict[GroupLabel, float] = field(default_factory=dict)

	def as_dict(self) -> Dict[str, Any]:
		return {
			"metric_name": self.metric_name,
			"gap": self.gap,
			"threshold": self.threshold,
			"violated": self.violated,
			"per_group": dict(sorted(self.per_group.items())),
		}
