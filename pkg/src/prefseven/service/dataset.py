"""Dataset loading: CSV and JSON performance tables with located parse errors."""
from __future__ import annotations

import csv
import io
import json
from importlib import resources
from pathlib import Path

from ..model import (Criterion, PerformanceTable, ValidationError, Violation,
                     validate_table)
from ..rationals import format_rational, parse_rational


class DatasetParseError(ValidationError):
    """Raised when a dataset cannot even be parsed into a table."""


def _parse_error(message: str, line: int | None = None,
                 column: int | None = None) -> DatasetParseError:
    where = {}
    if line is not None:
        where["line"] = line
    if column is not None:
        where["column"] = column
    return DatasetParseError(Violation("dataset-parse", message, where or None))


def load_dataset(source, format: str | None = None) -> PerformanceTable:
    """Load a performance table from CSV/JSON text, a path, or a parsed dict.

    Format is inferred from the file suffix or content when not given.
    Parse problems report the offending line and column; range and
    duplicate-id violations are raised after parsing.
    """
    if isinstance(source, PerformanceTable):
        return source
    if isinstance(source, dict):
        return _from_json_doc(source)
    if isinstance(source, Path) or (isinstance(source, str) and
                                    "\n" not in source and
                                    Path(source).suffix in (".csv", ".json")):
        path = Path(source)
        if not path.exists():
            raise _parse_error(f"dataset file not found: {path}")
        text = path.read_text()
        if format is None:
            format = "json" if path.suffix == ".json" else "csv"
        return load_dataset(text, format=format)
    if not isinstance(source, str):
        raise _parse_error(f"unsupported dataset source: {type(source).__name__}")
    if format is None:
        format = "json" if source.lstrip()[:1] in ("{", "[") else "csv"
    if format == "json":
        try:
            doc = json.loads(source)
        except json.JSONDecodeError as exc:
            raise _parse_error(f"invalid JSON: {exc.msg}",
                               line=exc.lineno, column=exc.colno) from exc
        return _from_json_doc(doc)
    if format == "csv":
        return _from_csv_text(source)
    raise _parse_error(f"unknown dataset format: {format}")


def _from_csv_text(text: str) -> PerformanceTable:
    rows = list(csv.reader(io.StringIO(text)))
    rows = [r for r in rows if any(cell.strip() for cell in r)]
    if not rows:
        raise _parse_error("dataset is empty", line=1)
    header = [cell.strip() for cell in rows[0]]
    if len(header) < 2:
        raise _parse_error("header must name at least one criterion",
                           line=1, column=1)
    criteria = [Criterion(id=c) for c in header[1:]]
    alternatives = []
    grades = []
    for lineno, row in enumerate(rows[1:], start=2):
        cells = [cell.strip() for cell in row]
        if len(cells) != len(header):
            raise _parse_error(
                f"expected {len(header)} cells, found {len(cells)}",
                line=lineno, column=len(cells) + 1)
        if not cells[0]:
            raise _parse_error("alternative id is empty", line=lineno, column=1)
        alternatives.append(cells[0])
        values = []
        for col, cell in enumerate(cells[1:], start=2):
            try:
                values.append(parse_rational(cell))
            except (ValueError, ZeroDivisionError):
                raise _parse_error(
                    f"grade {cell!r} is not a number", line=lineno, column=col)
        grades.append(tuple(values))
    table = PerformanceTable(tuple(criteria), tuple(alternatives),
                             tuple(grades))
    violations = validate_table(table)
    if violations:
        raise ValidationError(*violations)
    return table


def _from_json_doc(doc: dict) -> PerformanceTable:
    if not isinstance(doc, dict):
        raise _parse_error("dataset JSON must be an object")
    for key in ("criteria", "alternatives", "grades"):
        if key not in doc:
            raise _parse_error(f"dataset JSON missing field {key!r}")
    criteria = []
    for c in doc["criteria"]:
        if isinstance(c, str):
            criteria.append(Criterion(id=c))
        elif isinstance(c, dict):
            criteria.append(Criterion(
                id=c.get("id", ""), name=c.get("name") or "",
                scale_min=parse_rational(c.get("scale_min", 0)),
                scale_max=parse_rational(c.get("scale_max", 100))))
        else:
            raise _parse_error("criteria entries must be ids or objects")
    alternatives = [str(a) for a in doc["alternatives"]]
    grades = []
    for i, row in enumerate(doc["grades"]):
        if not isinstance(row, (list, tuple)) or len(row) != len(criteria):
            raise _parse_error(
                f"grades row {i + 1} must list {len(criteria)} values")
        try:
            grades.append(tuple(parse_rational(v) for v in row))
        except (ValueError, ZeroDivisionError) as exc:
            raise _parse_error(f"grades row {i + 1}: {exc}")
    table = PerformanceTable(tuple(criteria), tuple(alternatives),
                             tuple(grades))
    violations = validate_table(table)
    if violations:
        raise ValidationError(*violations)
    return table


def table_json(table: PerformanceTable) -> dict:
    """Canonical JSON form of a table (exact grade strings)."""
    return {
        "criteria": [{"id": c.id, "name": c.name,
                      "scale_min": format_rational(c.scale_min),
                      "scale_max": format_rational(c.scale_max)}
                     for c in table.criteria],
        "alternatives": list(table.alternatives),
        "grades": [[format_rational(v) for v in row]
                   for row in table.grades],
    }


def bundled_students() -> PerformanceTable:
    """The packaged five-student example table."""
    text = resources.files("prefseven.data").joinpath(
        "students.csv").read_text()
    return load_dataset(text, format="csv")
