"""Deterministic tabular output: CSV and JSON with fixed float formatting.

Floats are always written in 17-significant-digit scientific notation so
identical inputs produce byte-identical files; non-finite values render as
"nan"/"inf"/"-inf" (quoted strings in JSON, which has no literals for
them).  Parsing an emitted JSON table and re-emitting it reproduces the
bytes exactly.
"""

import json
import math
from dataclasses import dataclass, field

Cell = float | int | bool | str


@dataclass
class Table:
    columns: list[str]
    rows: list[list[Cell]] = field(default_factory=list)

    def append(self, *cells: Cell) -> None:
        if len(cells) != len(self.columns):
            raise ValueError(f"row has {len(cells)} cells, expected {len(self.columns)}")
        self.rows.append(list(cells))

    def column(self, name: str) -> list[Cell]:
        i = self.columns.index(name)
        return [row[i] for row in self.rows]


def format_float(x: float) -> str:
    """Fixed 17-significant-digit scientific form; 'nan'/'inf' for non-finite."""
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return f"{x:.16e}"


def _csv_cell(cell: Cell) -> str:
    if isinstance(cell, bool):
        return "true" if cell else "false"
    if isinstance(cell, int):
        return str(cell)
    if isinstance(cell, float):
        return format_float(cell)
    return str(cell)


def to_csv(table: Table) -> str:
    lines = [",".join(table.columns)]
    lines.extend(",".join(_csv_cell(c) for c in row) for row in table.rows)
    return "\n".join(lines) + "\n"


def _json_cell(cell: Cell) -> str:
    if isinstance(cell, bool):
        return "true" if cell else "false"
    if isinstance(cell, int):
        return str(cell)
    if isinstance(cell, float):
        text = format_float(cell)
        # JSON has no literal for nan/inf; keep them as strings
        return text if math.isfinite(cell) else json.dumps(text)
    return json.dumps(cell)


def to_json(table: Table) -> str:
    lines = ['{"schema": 1,']
    lines.append(f' "columns": {json.dumps(table.columns)},')
    lines.append(' "rows": [')
    body = [" [" + ", ".join(_json_cell(c) for c in row) + "]" for row in table.rows]
    lines.append(",\n".join(body))
    lines.append("]}")
    return "\n".join(lines) + "\n"


def parse_json(text: str) -> Table:
    """Inverse of :func:`to_json`; cell types follow the JSON values."""
    data = json.loads(text)
    if data.get("schema") != 1:
        raise ValueError(f"unsupported table schema: {data.get('schema')!r}")
    return Table(columns=list(data["columns"]),
                 rows=[list(r) for r in data["rows"]])


def render(table: Table, fmt: str) -> str:
    if fmt == "csv":
        return to_csv(table)
    if fmt == "json":
        return to_json(table)
    raise ValueError(f"unknown format {fmt!r} (expected csv or json)")
