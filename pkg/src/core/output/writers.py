"""
CSV and JSON writers for measure rows

CSV: UTF-8, `#`-prefixed metadata lines, one header row in CSV_COLUMNS order,
numbers with 17 significant digits. JSON: one {meta, rows} object; overflowed
values are written as the strings "Infinity" and "-Infinity".
"""

import csv
from collections.abc import Iterable
from datetime import datetime, timezone
from typing import TextIO

from src.core.output.models import CSV_COLUMNS, OutputDocument, OutputMeta, OutputRow
from src.utils import format_number

FORMATS = ("csv", "json")


def build_meta(command: str, timestamp: bool = True, residual: dict[str, str] | None = None) -> OutputMeta:
    """Metadata block; the timestamp is left out for byte-reproducible output"""
    return OutputMeta(
        command=command,
        timestamp=datetime.now(timezone.utc).isoformat(timespec="seconds") if timestamp else None,
        residual=residual or {},
    )


def _csv_cell(row: OutputRow, column: str) -> str:
    value = getattr(row, column)
    if isinstance(value, str):
        return value
    return format_number(value)


def write_csv(rows: Iterable[OutputRow], stream: TextIO, meta: OutputMeta) -> None:
    stream.write(f"# schema_version: {meta.schema_version}\n")
    if meta.command:
        stream.write(f"# command: {meta.command}\n")
    if meta.timestamp:
        stream.write(f"# timestamp: {meta.timestamp}\n")
    for measure_id, kind in sorted(meta.residual.items()):
        stream.write(f"# residual {measure_id}: {kind}\n")

    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow([_csv_cell(row, column) for column in CSV_COLUMNS])


def write_json(rows: Iterable[OutputRow], stream: TextIO, meta: OutputMeta) -> None:
    document = OutputDocument(meta=meta, rows=list(rows))
    stream.write(document.model_dump_json(indent=2))
    stream.write("\n")


def read_json(text: str) -> OutputDocument:
    return OutputDocument.model_validate_json(text)


def write_rows(
    rows: Iterable[OutputRow], stream: TextIO, meta: OutputMeta, output_format: str = "csv"
) -> None:
    """Write rows in the requested format"""
    if output_format == "json":
        write_json(rows, stream, meta)
    else:
        write_csv(rows, stream, meta)
