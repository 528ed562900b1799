import io
import csv
import json
import math
from typing import Any, Iterable, Optional, Sequence

from ..config import csv_significant_digits


__all__ = (
    "render_json",
    "render_csv",
    "format_cell",
    "json_number"
)


def json_number(value: Optional[float]) -> Optional[float]:
    """JSON has no NaN or infinity, they become null."""

    if value is None:
        return None

    value = float(value)
    return value if math.isfinite(value) else None


def render_json(payload: Any) -> str:
    """Deterministic JSON text, keys keep their insertion order."""

    return json.dumps(payload, indent=2, ensure_ascii=False, allow_nan=False) + "\n"


def format_cell(value: Any) -> str:
    """
    CSV text of one value.

    Note:
        Floats use 17 significant digits, booleans are lower case and empty values are blank.
    """

    if value is None:
        return ""

    if isinstance(value, bool):
        return "true" if value else "false"

    if isinstance(value, float):
        return format(value, f".{csv_significant_digits}g")

    return str(value)


def render_csv(header: Sequence[str], rows: Iterable[Sequence[Any]], stream: Optional[io.StringIO] = None) -> str:
    """
    RFC 4180 CSV with a header row.

    Args:
        header: Column names.
        rows: Rows of values, formatted by :code:`format_cell`.
        stream: Optional buffer to write into.

    Returns:
        CSV text.
    """

    stream = stream or io.StringIO()
    writer = csv.writer(stream, lineterminator="\r\n")

    writer.writerow(header)
    for row in rows:
        writer.writerow([format_cell(value) for value in row])

    return stream.getvalue()
