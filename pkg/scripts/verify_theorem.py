"""Exhaustive check of the even-partition parity statement plus the class-structure audit.

    python scripts/verify_theorem.py --max-n 30 --audit-n 24 --workers 4
"""

import argparse
import sys
import time

from spechtgram.audit import audit_even_partition
from spechtgram.determinant import verify_theorem
from spechtgram.hooks import is_odd
from spechtgram.partitions import partitions_of


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-n", type=int, default=30)
    parser.add_argument("--audit-n", type=int, default=24)
    parser.add_argument("--workers", type=int, default=1)
    args = parser.parse_args()

    start = time.perf_counter()
    reports = verify_theorem(args.max_n, workers=args.workers)
    for r in reports:
        print(f"n={r.n} even={r.even_count} violations={len(r.violations)} dichotomy={len(r.dichotomy_failures)}")
    print(f"parity check: {time.perf_counter() - start:.1f}s")

    start = time.perf_counter()
    problems = []
    for n in range(1, args.audit_n + 1):
        for lam in partitions_of(n):
            if not is_odd(lam):
                problems.extend(audit_even_partition(lam))
    for p in problems[:20]:
        print(p)
    print(f"audit up to n={args.audit_n}: {len(problems)} problems, {time.perf_counter() - start:.1f}s")
    return 0 if all(r.ok for r in reports) and not problems else 1


if __name__ == "__main__":
    sys.exit(main())
