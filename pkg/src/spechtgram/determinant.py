"""Square classes, the odd-branch determinant, 2-adic parity and the exhaustive theorem check."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from .branches import BranchClass, _moves, equivalence_classes, odd_branches
from .hooks import _is_odd_tuple, is_odd
from .partitions import Partition, _beta, format_partition, part_tuple, partitions_of


def _factor(value: int) -> Counter:
    if value < 1:
        raise ValueError(f"square classes need positive integers, got {value}")
    out: Counter = Counter()
    d = 2
    while d * d <= value:
        while value % d == 0:
            out[d] += 1
            value //= d
        d += 1
    if value > 1:
        out[value] += 1
    return out


@dataclass(frozen=True)
class SquareClass:
    """An element of Q^x / (Q^x)^2 for positive rationals, stored as its square-free representative."""

    squarefree: int = 1

    def __post_init__(self) -> None:
        if self.squarefree < 1 or any(e > 1 for e in _factor(self.squarefree).values()):
            raise ValueError(f"{self.squarefree} is not a positive square-free integer")

    def __mul__(self, other: SquareClass) -> SquareClass:
        return reduce_square_class([self.squarefree, other.squarefree], [])

    def __int__(self) -> int:
        return self.squarefree

    @property
    def is_odd(self) -> bool:
        return self.squarefree % 2 == 1

    def __str__(self) -> str:
        return str(self.squarefree)


def reduce_square_class(numerators: Iterable[int], denominators: Iterable[int]) -> SquareClass:
    """Square-free part of prod(numerators) / prod(denominators)."""
    exponents: Counter = Counter()
    for v in numerators:
        exponents.update(_factor(v))
    for v in denominators:
        exponents.update(_factor(v))  # x and 1/x share a square class
    result = 1
    for prime, e in exponents.items():
        if e % 2:
            result *= prime
    return SquareClass(result)


def v2(value: int) -> int:
    if value == 0:
        raise ValueError("2-adic valuation of 0 is undefined")
    return (value & -value).bit_length() - 1


def _require_even(lam: Partition) -> None:
    if is_odd(lam):
        raise ValueError(
            f"{lam} is odd: its character is not orthogonally stable, so no orthogonal determinant is defined"
        )


def orth_det(lam: Partition) -> SquareClass:
    """Square class of det(lambda) for even lambda, from the odd branches' hook pairs."""
    _require_even(lam)
    brs = odd_branches(lam)
    return reduce_square_class([br.h1 for br in brs], [br.h2 for br in brs])


def a2_parity(lam: Partition) -> int:
    """Parity of the 2-adic valuation of det(lambda), valid for every partition."""
    return sum(v2(br.h1) - v2(br.h2) for br in odd_branches(lam)) % 2


def a2_parity_fast(parts: tuple[int, ...]) -> int:
    """Same value as :func:`a2_parity` on a raw parts tuple, without building Branch objects."""
    beta = _beta(parts, len(parts))
    bit = 0
    for i, j, t in _moves(beta):
        new = list(beta)
        new[i] += t
        new[j] -= t
        if _is_odd_tuple(part_tuple(new)):
            bit ^= (v2(beta[i] - beta[j] + t) ^ v2(t)) & 1
    return bit


def class_is_odd(lam: Partition, cls: BranchClass) -> tuple[bool, int | None]:
    """Whether the product of h1/h2 over the class is an odd square-free integer modulo squares."""
    _require_even(lam)
    sq = reduce_square_class([br.h1 for br in cls.members], [br.h2 for br in cls.members])
    return (True, sq.squarefree) if sq.is_odd else (False, None)


@dataclass
class ParityReport:
    n: int
    even_count: int = 0
    violations: list[Partition] = field(default_factory=list)
    dichotomy_failures: list[Partition] = field(default_factory=list)
    # per even partition: (a2 parity bit, square-free representative of det)
    details: dict[Partition, tuple[int, int]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations and not self.dichotomy_failures

    def to_json(self, with_details: bool = False) -> dict:
        out = {
            "n": self.n,
            "even_count": self.even_count,
            "violations": [format_partition(p) for p in self.violations],
            "dichotomy_failures": [format_partition(p) for p in self.dichotomy_failures],
        }
        if with_details:
            out["partitions"] = [
                {"lambda": format_partition(p), "a2_parity": bit, "square_class": sq}
                for p, (bit, sq) in self.details.items()
            ]
        return out


def check_even_partition(lam: Partition) -> tuple[int, int, bool]:
    """(a2 parity, square class, dichotomy holds) for one even partition."""
    brs = odd_branches(lam)
    bit = sum(v2(br.h1) - v2(br.h2) for br in brs) % 2
    sq = reduce_square_class([br.h1 for br in brs], [br.h2 for br in brs]).squarefree
    dichotomy = True
    for cls in equivalence_classes(lam):
        odd, _ = class_is_odd(lam, cls)
        if not (odd or cls.case_label.descends):
            dichotomy = False
    return bit, sq, dichotomy


def verify_n(n: int, keep_details: bool = False) -> ParityReport:
    report = ParityReport(n)
    for lam in partitions_of(n):
        if is_odd(lam):
            continue
        bit, sq, dichotomy = check_even_partition(lam)
        report.even_count += 1
        if bit:
            report.violations.append(lam)
        if not dichotomy:
            report.dichotomy_failures.append(lam)
        if keep_details:
            report.details[lam] = (bit, sq)
    return report


def verify_theorem(n_max: int, keep_details: bool = False, workers: int = 1) -> list[ParityReport]:
    """Check every even partition of every n <= n_max; violations are collected, not raised."""
    if n_max < 1:
        raise ValueError(f"n_max must be positive, got {n_max}")
    ns = range(1, n_max + 1)
    if workers <= 1:
        return [verify_n(n, keep_details) for n in ns]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(verify_n, ns, [keep_details] * len(ns)))
