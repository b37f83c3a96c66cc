from __future__ import annotations

from typing import List, Optional

from fairmas import constants


class FairmasError(Exception):
	exit_code = constants.EXIT_INPUT_ERROR

	def __init__(self, *, code: str, message: str, evidence: Optional[List[str]] = None):
		super().__init__(message)
		self.code = code
		self.message = message
		self.evidence = list(evidence or [])


class ConfigError(FairmasError):
	def __init__(self, message: str, evidence: Optional[List[str]] = None):
		super().__init__(code="config_invalid", message=message, evidence=evidence)


class InputFormatError(FairmasError):
	def __init__(self, message: str, *, line_number: Optional[int] = None, evidence: Optional[List[str]] = None):
		if line_number is not None:
			message = f"line {line_number}: {message}"
		super().__init__(code="input_format_invalid", message=message, evidence=evidence)
		self.line_number = line_number


class MetricError(FairmasError):
	def __init__(self, message: str, evidence: Optional[List[str]] = None):
		super().__init__(code="metric_undefined", message=message, evidence=evidence)


class InterventionError(FairmasError):
	def __init__(self, message: str, evidence: Optional[List[str]] = None):
		super().__init__(code="intervention_invalid", message=message, evidence=evidence)


class OptimizerError(FairmasError):
	def __init__(self, message: str, evidence: Optional[List[str]] = None):
		super().__init__(code="optimizer_invalid", message=message, evidence=evidence)


class SearchSpaceTooLarge(OptimizerError):
	def __init__(self, size: int, cap: int):
		super().__init__(
			f"Profile space has {size} profiles, above the cap of {cap}; use solve_localsearch instead.",
			evidence=[f"size={size}", f"cap={cap}"],
		)
		self.code = "search_space_too_large"
		self.size = size
		self.cap = cap


class ArtifactError(FairmasError):
	exit_code = constants.EXIT_IO_ERROR

	def __init__(self, message: str, evidence: Optional[List[str]] = None):
		super().__init__(code="artifact_io_error", message=message, evidence=evidence)
