from __future__ import annotations

import logging
from pathlib import Path
from typing import Union

from fairmas.adapters.csv_adapter import read_outcome_csv
from fairmas.errors import ConfigError
from fairmas.metrics.fairness import detect_bias
from fairmas.metrics.types import METRIC_KINDS, BiasReport
from fairmas.schemas import BiasReportModel


logger = logging.getLogger(__name__)


def audit_outcomes(path: Union[str, Path], metric: str, delta: float) -> BiasReport:
	if metric not in METRIC_KINDS:
		raise ConfigError(f"Unknown metric {metric!r}.", evidence=[f"allowed={list(METRIC_KINDS)}"])
	if delta < 0:
		raise ConfigError("Metric threshold must be >= 0.", evidence=[f"delta={delta!r}"])
	table = read_outcome_csv(path)
	report = detect_bias(table, metric, delta)  # type: ignore[arg-type]
	logger.info("audit %s rows=%d gap=%.6f violated=%s", metric, len(table), report.gap, report.violated)
	return report


def report_payload(report: BiasReport) -> dict:
	return BiasReportModel.model_validate(report.as_dict()).model_dump()
