"""Serialization of coefficient tables.

Entries exceed 64 bits early (beta(n, 0) = n^(n-1) already needs 80 bits at
n = 16), so both formats carry them as decimal strings and parse them back
with int(); round trips are lossless and the emitted bytes are deterministic
for a given table.  CSV columns are ``n,k,beta`` with a header, LF line
endings and no quoting; JSON is ``{"n_max": N, "rows": [[...], ...]}`` with
``rows[0]`` holding row 1.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .triangle import CoefficientTable

__all__ = [
    "OutputRecord",
    "table_to_csv",
    "table_to_json",
    "parse_table_csv",
    "parse_table_json",
    "parse_table",
    "load_table",
]


@dataclass(frozen=True)
class OutputRecord:
    """One emitted triangle entry; beta is exact decimal text."""

    n: int
    k: int
    beta: str
    route: str | None = None


def iter_records(table: CoefficientTable) -> list[OutputRecord]:
    return [
        OutputRecord(n=n, k=k, beta=str(b))
        for n in range(1, table.n_max + 1)
        for k, b in enumerate(table.rows[n])
    ]


def table_to_csv(table: CoefficientTable) -> str:
    lines = ["n,k,beta"]
    lines.extend(f"{r.n},{r.k},{r.beta}" for r in iter_records(table))
    return "\n".join(lines) + "\n"


def table_to_json(table: CoefficientTable) -> str:
    payload = {
        "n_max": table.n_max,
        "rows": [[str(b) for b in table.rows[n]] for n in range(1, table.n_max + 1)],
    }
    return json.dumps(payload, separators=(",", ":")) + "\n"


def _table_from_rows(n_max: int, rows: list[list[int]]) -> CoefficientTable:
    if n_max != len(rows):
        raise ValueError(f"n_max {n_max} does not match {len(rows)} rows")
    return CoefficientTable(n_max=n_max, rows=((),) + tuple(tuple(r) for r in rows))


def parse_table_csv(text: str) -> CoefficientTable:
    lines = [line for line in text.split("\n") if line]
    if not lines or lines[0] != "n,k,beta":
        raise ValueError("CSV table must start with the header 'n,k,beta'")
    rows: list[list[int]] = []
    for line in lines[1:]:
        parts = line.split(",")
        if len(parts) != 3:
            raise ValueError(f"malformed CSV line: {line!r}")
        n, k, beta = int(parts[0]), int(parts[1]), int(parts[2])
        if n == len(rows) + 1 and k == 0:
            rows.append([])
        if n != len(rows) or k != len(rows[-1]):
            raise ValueError(f"CSV entries out of order at n={n}, k={k}")
        rows[-1].append(beta)
    if not rows:
        raise ValueError("CSV table has no entries")
    return _table_from_rows(len(rows), rows)


def parse_table_json(text: str) -> CoefficientTable:
    payload = json.loads(text)
    if not isinstance(payload, dict) or set(payload) != {"n_max", "rows"}:
        raise ValueError("JSON table must be an object with keys n_max and rows")
    rows = [[int(entry) for entry in row] for row in payload["rows"]]
    return _table_from_rows(int(payload["n_max"]), rows)


def parse_table(text: str) -> CoefficientTable:
    """Parse either serialization, sniffing the format from the first byte."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return parse_table_json(text)
    return parse_table_csv(text)


def load_table(path: str) -> CoefficientTable:
    with open(path, "r", encoding="ascii") as fh:
        return parse_table(fh.read())
