"""
Text rendering of count tables.

Rows are emitted in the order they were added (k ascending for word
classes, the fixed variant order for Catalan words) and columns are
n = 0..n_max, so output is stable and diff-friendly.
"""

import csv
import io
import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional

from .oeis import render_bfile


class OutputFormat(Enum):
    """Supported table encodings."""

    CSV = "csv"
    JSON = "json"
    MARKDOWN = "markdown"
    BFILE = "bfile"


@dataclass
class CountRow:
    """
    One row of a table.

    Word-class rows carry the class name and k; Catalan rows carry only the
    variant name.
    """

    counts: List[int]
    class_name: Optional[str] = None
    k: Optional[int] = None
    variant: Optional[str] = None

    @property
    def label(self) -> str:
        return str(self.k) if self.variant is None else str(self.variant)


@dataclass
class ResultsTable:
    """Table of exact counts with one renderer per OutputFormat."""

    rows: List[CountRow] = field(default_factory=list)

    @property
    def is_catalan(self) -> bool:
        return bool(self.rows) and self.rows[0].variant is not None

    @property
    def key_header(self) -> str:
        return "variant" if self.is_catalan else "k"

    def set_data(self, rows: List[CountRow]) -> None:
        self.rows = list(rows)

    def add_row(self, row: CountRow) -> None:
        self.rows.append(row)

    def clear_data(self) -> None:
        self.rows = []

    def records(self) -> List[Dict[str, Any]]:
        """One record per cell, counts as strings."""
        records: List[Dict[str, Any]] = []
        for row in self.rows:
            for n, count in enumerate(row.counts):
                if row.variant is not None:
                    records.append({"variant": row.variant, "n": n, "count": str(count)})
                else:
                    records.append(
                        {"class": row.class_name, "k": row.k, "n": n, "count": str(count)}
                    )
        return records

    def render(self, fmt: OutputFormat) -> str:
        if fmt is OutputFormat.CSV:
            return self.to_csv()
        if fmt is OutputFormat.JSON:
            return self.to_json()
        if fmt is OutputFormat.MARKDOWN:
            return self.to_markdown()
        return self.to_bfile()

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow([self.key_header, "n", "count"])
        for row in self.rows:
            for n, count in enumerate(row.counts):
                writer.writerow([row.label, n, count])
        return buffer.getvalue()

    def to_json(self) -> str:
        return json.dumps(self.records(), indent=2) + "\n"

    def to_markdown(self) -> str:
        width = max((len(row.counts) for row in self.rows), default=0)
        header = [f"{self.key_header}/n"] + [str(n) for n in range(width)]
        lines = [
            "| " + " | ".join(header) + " |",
            "|" + "|".join("---" for _ in header) + "|",
        ]
        for row in self.rows:
            cells = [row.label] + [str(c) for c in row.counts]
            lines.append("| " + " | ".join(cells) + " |")
        return "\n".join(lines) + "\n"

    def to_bfile(self) -> str:
        if len(self.rows) != 1:
            raise ValueError(
                f"b-file output holds exactly one sequence, table has {len(self.rows)} rows"
            )
        return render_bfile(self.rows[0].counts)
