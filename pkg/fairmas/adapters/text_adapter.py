from __future__ import annotations

from pathlib import Path
from typing import Union

from fairmas.errors import ArtifactError, InputFormatError


def decode_utf8(data: bytes) -> str:
	"""Decode file contents; undecodable bytes raise InputFormatError naming the 1-based line."""
	try:
		return data.decode("utf-8")
	except UnicodeDecodeError as exc:
		line_number = data.count(b"\n", 0, exc.start) + 1
		raise InputFormatError(
			"file is not valid UTF-8.",
			line_number=line_number,
			evidence=[f"byte_offset={exc.start}", f"reason={exc.reason}"],
		) from exc


def read_utf8(path: Union[str, Path]) -> str:
	source = Path(path)
	try:
		data = source.read_bytes()
	except OSError as exc:
		raise ArtifactError(f"Could not read {source}", evidence=[str(exc)]) from exc
	return decode_utf8(data)
