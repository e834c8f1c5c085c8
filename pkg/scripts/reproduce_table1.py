"""Recompute A(n), B(n) for n <= 40 and diff against the published table.

    python scripts/reproduce_table1.py --workers 8 --csv table1.csv
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))

from table1 import TABLE1  # noqa: E402

from spechtgram.stats import stats_table, write_csv  # noqa: E402


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-n", type=int, default=40)
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--csv", default=None)
    args = parser.parse_args()

    start = time.perf_counter()
    rows = stats_table(args.max_n, workers=args.workers)
    elapsed = time.perf_counter() - start
    bad = 0
    for r in rows:
        expected = TABLE1.get(r.n)
        flag = "" if expected is None or expected == (r.A, r.B) else f"  <-- published {expected}"
        bad += bool(flag)
        print(f"{r.n:3d} A={r.A:5d} B={r.B:5d} delta={r.delta}{flag}")
    if args.csv:
        write_csv(rows, args.csv)
    halves = sum(1 for r in rows if 2 * r.A == r.B)
    print(f"A = B/2 for {halves} of {len(rows)} values; {bad} mismatches; {elapsed:.1f}s")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
