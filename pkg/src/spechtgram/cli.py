"""Command-line entry point: ``spechtgram <subcommand> [partition] [options]``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import hooks, oracle, stats
from .branches import branches, equivalence_classes, odd_branches
from .determinant import a2_parity, orth_det, verify_theorem
from .partitions import beta_sequence, hook_table, parse_partition


def _emit(args: argparse.Namespace, text: str, payload) -> None:
    print(json.dumps(payload, indent=2) if args.json else text)


def cmd_hooks(args):
    table = hook_table(args.partition)
    rows = table.rows()
    _emit(args, "\n".join(" ".join(str(h) for h in row) for row in rows), {"lambda": str(args.partition), "hooks": rows})


def cmd_beta(args):
    beta = beta_sequence(args.partition, args.m)
    _emit(args, ",".join(map(str, beta)), {"lambda": str(args.partition), "beta": list(beta)})


def cmd_core(args):
    res = hooks.core(args.partition, args.q)
    removed = [{"cell": list(cell), "hook": h} for cell, h in res.removed_hooks]
    text = str(res.core)
    if res.removed_hooks:
        text += "\nremoved: " + " ".join(f"({i},{j}):{h}" for (i, j), h in res.removed_hooks)
    _emit(args, text, {"lambda": str(args.partition), "q": args.q, "core": str(res.core), "removed": removed})


def cmd_dmap(args):
    image = hooks.d_map(args.partition)
    _emit(args, str(image), {"lambda": str(args.partition), "D": str(image)})


def cmd_oddrank(args):
    rank = hooks.odd_rank(args.partition)
    _emit(args, str(rank), {"lambda": str(args.partition), "odd_rank": rank})


def cmd_dim(args):
    f = hooks.dimension(args.partition)
    _emit(args, str(f), {"lambda": str(args.partition), "dimension": f})


def cmd_parity(args):
    lam = args.partition
    odd = hooks.is_odd(lam)
    bit = a2_parity(lam)
    _emit(
        args,
        f"{'odd' if odd else 'even'} a2_parity={bit}",
        {"lambda": str(lam), "odd": odd, "a2_parity": bit},
    )


def cmd_branches(args):
    found = odd_branches(args.partition) if args.odd else branches(args.partition)
    text = "\n".join(f"{b.mu} h1={b.h1} h2={b.h2}" for b in found)
    _emit(args, text, [b.to_json() for b in found])


def cmd_classes(args):
    lam = args.partition
    classes = equivalence_classes(lam)
    lines = []
    for cls in classes:
        members = " ".join(f"({b.mu})" for b in cls.members)
        label = cls.case_label.value if cls.case_label else "-"
        rep = f" distinguished=({cls.distinguished.mu})" if cls.distinguished else ""
        lines.append(f"D=({cls.d_image}) {label} size={len(cls)}: {members}{rep}")
    _emit(args, "\n".join(lines), [cls.to_json() for cls in classes])


def cmd_det(args):
    sq = orth_det(args.partition)
    _emit(args, str(sq), {"lambda": str(args.partition), "square_class": sq.squarefree})


def cmd_verify(args):
    reports = verify_theorem(args.max_n, keep_details=args.json, workers=args.threads)
    if args.json:
        print(json.dumps([r.to_json(with_details=True) for r in reports], indent=2))
    else:
        for r in reports:
            print(f"n={r.n} even={r.even_count} violations={len(r.violations)}")
    return 0 if all(r.ok for r in reports) else 1


def cmd_oracle(args):
    lam = args.partition
    gram = oracle.gram_matrix(lam, budget=args.budget)
    value = oracle.determinant(gram)
    primes = args.prime or [2]
    vals = {p: oracle.p_valuation(value, p) for p in primes}
    factors = oracle.factorize(value)
    if args.json or args.gram:
        payload = {
            "lambda": str(lam),
            "det": value,
            "factorization": {str(p): e for p, e in factors.items()},
            "valuations": {str(p): v for p, v in vals.items()},
        }
        if args.gram:
            payload["gram"] = gram
        print(json.dumps(payload, indent=2))
    else:
        fact = " * ".join(f"{p}^{e}" for p, e in factors.items()) or "1"
        print(f"det={value}")
        print(f"factorization={fact}")
        for p, v in vals.items():
            print(f"a^({p})={v}")


def cmd_stats(args):
    rows = stats.stats_table(args.max_n, workers=args.threads)
    if args.csv:
        stats.write_csv(rows, args.csv)
    if args.json:
        print(stats.rows_to_json(rows))
    else:
        print(stats.rows_to_csv(rows), end="")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spechtgram", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, partition=True):
        p = sub.add_parser(name, help=help_text)
        if partition:
            p.add_argument("partition", help="e.g. 7,4,3 or 2,1^5")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    add("hooks", cmd_hooks, "hook diagram")
    add("beta", cmd_beta, "beta-numbers").add_argument("-m", type=int, default=None, help="sequence length")
    add("core", cmd_core, "q-core").add_argument("-q", type=int, required=True)
    add("dmap", cmd_dmap, "remove the 2^r-hook")
    add("oddrank", cmd_oddrank, "oddness rank")
    add("dim", cmd_dim, "dimension of the Specht module")
    add("parity", cmd_parity, "parity of the dimension and of a^(2)")
    add("branches", cmd_branches, "branches with hook pairs").add_argument("--odd", action="store_true")
    add("classes", cmd_classes, "odd-branch classes under D")
    add("det", cmd_det, "square class of the Gram determinant (even partitions)")

    p = add("verify", cmd_verify, "check a^(2) is even for all even partitions", partition=False)
    p.add_argument("--max-n", type=int, default=30)
    p.add_argument("--threads", type=int, default=1)

    p = add("oracle", cmd_oracle, "brute-force Gram determinant")
    p.add_argument("--prime", type=int, action="append", help="repeatable; default 2")
    p.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET, help="tabloid cap")
    p.add_argument("--gram", action="store_true", help="dump the Gram matrix as JSON")

    p = add("stats", cmd_stats, "A(n), B(n) table", partition=False)
    p.add_argument("--max-n", type=int, default=stats.DEFAULT_CAP)
    p.add_argument("--csv", default=None, help="write the table to this path")
    p.add_argument("--threads", type=int, default=1)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if hasattr(args, "partition"):
            args.partition = parse_partition(args.partition)
        status = args.func(args)
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return status or 0


if __name__ == "__main__":
    sys.exit(main())
