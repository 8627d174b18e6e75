"""Readers for sequence files: JSON documents and OEIS-style b-files."""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any, Optional

from pydantic import ValidationError

logger = logging.getLogger(__name__)


class InputFormatError(ValueError):
    """Raised for malformed input files; carries the offending position."""

    def __init__(
        self, message: str, *, source: str = "<input>", line: Optional[int] = None, column: Optional[int] = None
    ):
        self.source = source
        self.line = line
        self.column = column
        where = source
        if line is not None:
            where += f":{line}"
            if column is not None:
                where += f":{column}"
        super().__init__(f"{where}: {message}")


def load_json_document(text: str, *, source: str = "<input>") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputFormatError(exc.msg, source=source, line=exc.lineno, column=exc.colno) from exc


def _parse_bfile(text: str, source: str):
    from mahlerkit.series.sequences import ValuesSequence

    indices: list[int] = []
    values: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InputFormatError("expected two columns: index value", source=source, line=lineno)
        try:
            index = int(parts[0])
            value = int(parts[1])
        except ValueError as exc:
            raise InputFormatError(f"non-integer entry {line!r}", source=source, line=lineno) from exc
        if indices and index != indices[-1] + 1:
            raise InputFormatError(
                f"index {index} does not follow {indices[-1]}", source=source, line=lineno
            )
        indices.append(index)
        values.append(str(value))
    if not indices:
        raise InputFormatError("empty b-file", source=source)
    if indices[0] not in (0, 1):
        raise InputFormatError(f"b-file must start at index 0 or 1, got {indices[0]}", source=source, line=1)
    logger.debug("read %s b-file terms from %s", len(values), source)
    return ValuesSequence(values=values, offset=indices[0])


def parse_sequence_document(data: Any, *, source: str = "<input>"):
    """Turn a decoded JSON document into a sequence spec.

    Accepts either a tagged spec ``{"kind": ...}`` or ``{"values": [...], "offset": 0|1}``.
    """
    from mahlerkit.series.sequences import ValuesSequence, parse_sequence_spec

    if not isinstance(data, dict):
        raise InputFormatError("sequence document must be a JSON object", source=source)
    try:
        if "kind" in data:
            return parse_sequence_spec(data)
        if "values" in data:
            return ValuesSequence.model_validate(data)
    except ValidationError as exc:
        raise InputFormatError(str(exc), source=source) from exc
    raise InputFormatError("expected a 'kind' tag or a 'values' list", source=source)


def read_sequence_file(path: str | Path):
    """Load a sequence spec from a JSON file or a two-column b-file."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputFormatError(str(exc), source=str(path)) from exc
    if text.lstrip().startswith("{"):
        return parse_sequence_document(load_json_document(text, source=str(path)), source=str(path))
    return _parse_bfile(text, str(path))
