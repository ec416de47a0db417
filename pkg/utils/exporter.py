"""
Handles the exporting of reports to JSON, markdown and CSV.

Exact rationals are written as "p/q" strings everywhere. JSON output uses
sorted keys and a fixed indent so that identical runs give identical bytes.
"""

import csv
import io
import json
from dataclasses import fields, is_dataclass
from fractions import Fraction
from typing import Any, Iterable, List, Mapping, Optional, Sequence

from core.error_handler import ExportError
from core.exactlinalg import RationalMatrix
from core.notation import format_rational

SCHEMA_VERSION = 1


def to_plain(obj: Any) -> Any:
    """Recursively converts reports into JSON-ready values."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (str, int)):
        return obj
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, RationalMatrix):
        return [[format_rational(x) for x in row] for row in obj.to_rows()]
    if is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: to_plain(getattr(obj, f.name)) for f in fields(obj)}
    if isinstance(obj, Mapping):
        return {str(k): to_plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [to_plain(v) for v in items]
    raise ExportError(f"cannot serialize value of type {type(obj).__name__}")


def to_json(report: Mapping[str, Any]) -> str:
    payload = dict(to_plain(report))
    payload.setdefault("schema", SCHEMA_VERSION)
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def to_csv(rows: Sequence[Mapping[str, Any]], columns: Optional[List[str]] = None) -> str:
    """Writes flat rows; columns default to the keys of the first row."""
    if not rows:
        return ""
    columns = columns or list(rows[0])
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(row.get(c)) for c in columns])
    return buffer.getvalue()


def _cell(value: Any) -> str:
    if value is None:
        return "N/A"
    if isinstance(value, bool):
        return "yes" if value else "no"
    plain = to_plain(value)
    return plain if isinstance(plain, str) else json.dumps(plain)


def markdown_table(headers: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    lines = ["| " + " | ".join(headers) + " |",
             "|" + "|".join("---" for _ in headers) + "|"]
    for row in rows:
        lines.append("| " + " | ".join(_cell(v) for v in row) + " |")
    return "\n".join(lines) + "\n"


def write_report(path: str, text: str) -> None:
    """Writes an already rendered report to a file."""
    try:
        with open(path, 'w', newline='', encoding='utf-8') as f:
            f.write(text)
    except (IOError, OSError) as e:
        raise ExportError(f"Failed to write to file: {path}\nError: {e}") from e
