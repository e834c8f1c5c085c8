"""A(n) / B(n) statistics over all partitions of n, with CSV and JSON writers."""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from pathlib import Path

from .determinant import a2_parity_fast
from .hooks import _is_odd_tuple
from .partitions import partition_tuples

DEFAULT_CAP = 40
CSV_FIELDS = ("n", "A", "B", "B_formula", "delta")


class ResourceLimitError(RuntimeError):
    pass


@dataclass(frozen=True)
class StatRow:
    n: int
    A: int
    B: int
    B_formula: int
    delta: Fraction  # B/2 - A

    def csv_values(self) -> list[str]:
        return [str(self.n), str(self.A), str(self.B), str(self.B_formula), format_delta(self.delta)]

    def to_json(self) -> dict:
        out = asdict(self)
        out["delta"] = self.delta.numerator if self.delta.denominator == 1 else float(self.delta)
        return out


def format_delta(delta: Fraction) -> str:
    if delta.denominator == 1:
        return str(delta.numerator)
    # B/2 only ever has denominator 2, which has an exact decimal
    return str(float(delta))


def b_formula(n: int) -> int:
    """2 to the sum of the exponents of the powers of two in the binary expansion of n."""
    return 2 ** sum(i for i in range(n.bit_length()) if n >> i & 1)


def count_B(n: int) -> int:
    return sum(1 for parts in partition_tuples(n) if _is_odd_tuple(parts))


def count_A(n: int) -> int:
    return sum(a2_parity_fast(parts) for parts in partition_tuples(n))


def stat_row(n: int) -> StatRow:
    a = b = 0
    for parts in partition_tuples(n):
        b += _is_odd_tuple(parts)
        a += a2_parity_fast(parts)
    return StatRow(n, a, b, b_formula(n), Fraction(b, 2) - a)


def stats_table(n_max: int, workers: int = 1, cap: int = DEFAULT_CAP) -> list[StatRow]:
    if n_max > cap:
        raise ResourceLimitError(f"max n {n_max} exceeds the enumeration cap of {cap}")
    ns = list(range(1, n_max + 1))
    if workers <= 1:
        return [stat_row(n) for n in ns]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # largest n first so the long jobs start early
        rows = list(pool.map(stat_row, reversed(ns)))
    return sorted(rows, key=lambda row: row.n)


def rows_to_csv(rows: list[StatRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for row in rows:
        writer.writerow(row.csv_values())
    return buf.getvalue()


def rows_from_csv(text: str) -> list[StatRow]:
    reader = csv.DictReader(io.StringIO(text))
    if tuple(reader.fieldnames or ()) != CSV_FIELDS:
        raise ValueError(f"unexpected CSV header {reader.fieldnames}")
    return [
        StatRow(int(r["n"]), int(r["A"]), int(r["B"]), int(r["B_formula"]), Fraction(r["delta"]))
        for r in reader
    ]


def write_csv(rows: list[StatRow], path: str | Path) -> None:
    Path(path).write_text(rows_to_csv(rows), encoding="utf-8")


def rows_to_json(rows: list[StatRow]) -> str:
    return json.dumps([row.to_json() for row in rows], indent=2)
