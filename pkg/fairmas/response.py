from __future__ import annotations

from datetime import datetime, timezone
from typing import Any, Dict, List, Optional

from fairmas.errors import FairmasError


def now_iso() -> str:
	return datetime.now(timezone.utc).isoformat().replace("+00:00", "Z")


def success_response(
	*,
	data: Optional[Dict[str, Any]] = None,
	report: Optional[Dict[str, Any]] = None,
) -> Dict[str, Any]:
	payload: Dict[str, Any] = {
		"ok": True,
		"generated_at": now_iso(),
	}
	if data is not None:
		payload["data"] = data
	if report is not None:
		payload["report"] = report
	return payload


def error_response(
	*,
	code: str,
	message: str,
	evidence: Optional[List[str]] = None,
) -> Dict[str, Any]:
	return {
		"ok": False,
		"generated_at": now_iso(),
		"error": {
			"code": code,
			"message": message,
			"evidence": evidence or [],
		},
	}


def error_from_exception(exc: FairmasError) -> Dict[str, Any]:
	return error_response(code=exc.code, message=exc.message, evidence=exc.evidence)
