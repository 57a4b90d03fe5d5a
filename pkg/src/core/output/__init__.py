"""Output rows and their CSV/JSON serialization"""

from .models import CSV_COLUMNS, SCHEMA_VERSION, OutputDocument, OutputMeta, OutputRow
from .writers import FORMATS, build_meta, read_json, write_csv, write_json, write_rows

__all__ = [
    "CSV_COLUMNS",
    "FORMATS",
    "SCHEMA_VERSION",
    "OutputDocument",
    "OutputMeta",
    "OutputRow",
    "build_meta",
    "read_json",
    "write_csv",
    "write_json",
    "write_rows",
]
