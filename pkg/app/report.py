"""
Rendering of command payloads as aligned tables, TSV or JSON.

A payload is a dict with a "rows" list of flat records plus optional
"summary" and "body" entries. Nested records (serialized bodies) only
appear in JSON output.
"""

import json
from typing import Any, Dict, List, Sequence

FORMATS = ("table", "tsv", "json")


def format_number(value: float, precision: int) -> str:
    text = f"{value:.{precision}f}"
    if float(text) == 0:
        text = text.lstrip("-")
    return text


def format_cell(value: Any, precision: int) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, float):
        return format_number(value, precision)
    if isinstance(value, (list, tuple)):
        return " ".join(format_cell(item, precision) for item in value)
    return str(value)


def round_value(value: Any, precision: int) -> Any:
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, float):
        return round(value, precision) + 0.0
    if isinstance(value, (list, tuple)):
        return [round_value(item, precision) for item in value]
    return value


def _flat_columns(rows: Sequence[Dict[str, Any]]) -> List[str]:
    columns: List[str] = []
    for row in rows:
        for key, value in row.items():
            if key not in columns and not isinstance(value, dict):
                columns.append(key)
    return columns


def render_table(payload: Dict[str, Any], precision: int) -> str:
    rows = payload.get("rows", [])
    lines = []
    columns = _flat_columns(rows)
    if columns:
        cells = [[format_cell(row.get(column), precision) for column in columns] for row in rows]
        widths = [max([len(column)] + [len(line[i]) for line in cells]) for i, column in enumerate(columns)]
        lines.append("  ".join(column.ljust(width) for column, width in zip(columns, widths)).rstrip())
        lines.append("  ".join("-" * width for width in widths))
        for line in cells:
            lines.append("  ".join(cell.ljust(width) for cell, width in zip(line, widths)).rstrip())
    summary = payload.get("summary")
    if summary:
        if lines:
            lines.append("")
        width = max(len(key) for key in summary)
        for key, value in summary.items():
            lines.append(f"{key.ljust(width)}  {format_cell(value, precision)}")
    return "\n".join(lines) + "\n"


def render_tsv(payload: Dict[str, Any], precision: int) -> str:
    rows = payload.get("rows", [])
    lines = []
    columns = _flat_columns(rows)
    if columns:
        lines.append("\t".join(columns))
        for row in rows:
            lines.append("\t".join(format_cell(row.get(column), precision) for column in columns))
    for key, value in (payload.get("summary") or {}).items():
        lines.append(f"# {key}\t{format_cell(value, precision)}")
    return "\n".join(lines) + "\n"


def render_json(payload: Dict[str, Any], precision: int) -> str:
    """Measure values rounded to precision; nested bodies keep exact masses"""
    document: Dict[str, Any] = {}
    for key, value in payload.items():
        if key == "rows":
            document[key] = [
                {name: cell if isinstance(cell, dict) else round_value(cell, precision) for name, cell in row.items()}
                for row in value
            ]
        elif key == "summary":
            document[key] = {name: round_value(cell, precision) for name, cell in value.items()}
        else:
            document[key] = value
    return json.dumps(document, indent=2, ensure_ascii=False) + "\n"


RENDERERS = {
    "table": render_table,
    "tsv": render_tsv,
    "json": render_json,
}


def render(payload: Dict[str, Any], fmt: str, precision: int) -> str:
    return RENDERERS[fmt](payload, precision)
