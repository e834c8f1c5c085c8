"""Partitions, beta-numbers, dominance, hook lengths and the beta-mismatch metric."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import accumulate, zip_longest
from typing import Iterable, Iterator, Sequence


class PartitionError(ValueError):
    """Raised for malformed partition text or invalid partition data."""


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are stripped on construction, so ``Partition((3, 1, 0))``
    equals ``Partition((3, 1))`` and ``Partition(())`` is the empty
    partition (0).
    """

    parts: tuple[int, ...]
    n: int = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts):
            raise PartitionError(f"parts must be positive integers: {self.parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise PartitionError(f"parts must be weakly decreasing: {self.parts}")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "n", sum(parts))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def __str__(self) -> str:
        return format_partition(self)

    def __repr__(self) -> str:
        return f"Partition({self.parts})"

    def cells(self) -> Iterator[tuple[int, int]]:
        """Cells (i, j) of the Young diagram, 1-indexed, row by row."""
        for i, row in enumerate(self.parts, start=1):
            for j in range(1, row + 1):
                yield (i, j)

    def conjugate(self) -> Partition:
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p >= j) for j in range(1, self.parts[0] + 1)))


def P(*parts: int) -> Partition:
    """Shorthand constructor: ``P(7, 4, 3)``."""
    return Partition(parts)


_TOKEN = re.compile(r"^(\d+)(?:\^(\d+))?$")


def parse_partition(text: str) -> Partition:
    """Parse ``"7,4,3"`` or ``"2,1^5"``; the lone token ``"0"`` is the empty partition."""
    text = text.strip().strip("()")
    if text in ("0", ""):
        if text == "":
            raise PartitionError("empty partition text; use '0' for the empty partition")
        return Partition(())
    parts: list[int] = []
    for token in text.split(","):
        token = token.strip()
        m = _TOKEN.match(token)
        if m is None:
            raise PartitionError(f"malformed token {token!r}")
        value = int(m.group(1))
        count = int(m.group(2)) if m.group(2) is not None else 1
        if value <= 0:
            raise PartitionError(f"non-positive part in token {token!r}")
        if count <= 0:
            raise PartitionError(f"non-positive exponent in token {token!r}")
        if parts and value > parts[-1]:
            raise PartitionError(f"parts not weakly decreasing at token {token!r}")
        parts.extend([value] * count)
    return Partition(tuple(parts))


def format_partition(lam: Partition) -> str:
    """Inverse of :func:`parse_partition` (without exponent sugar)."""
    if not lam.parts:
        return "0"
    return ",".join(str(p) for p in lam.parts)


def dominance_leq(lam: Partition, mu: Partition) -> bool:
    """True iff ``lam`` is dominated by ``mu`` (all prefix sums of lam <= those of mu)."""
    if lam.n != mu.n:
        raise PartitionError(f"dominance needs equal sizes, got {lam.n} and {mu.n}")
    a = accumulate(lam.parts)
    b = accumulate(mu.parts)
    for x, y in zip_longest(a, b, fillvalue=lam.n):
        if x > y:
            return False
    return True


@dataclass(frozen=True)
class HookTable:
    shape: Partition
    hooks: dict[tuple[int, int], int]

    def first_column(self) -> tuple[int, ...]:
        return tuple(self.hooks[(i, 1)] for i in range(1, len(self.shape) + 1))

    def rows(self) -> list[list[int]]:
        return [[self.hooks[(i, j)] for j in range(1, row + 1)] for i, row in enumerate(self.shape.parts, start=1)]


def hook_table(lam: Partition) -> HookTable:
    conj = lam.conjugate().parts
    hooks = {(i, j): (lam.parts[i - 1] - j) + (conj[j - 1] - i) + 1 for (i, j) in lam.cells()}
    return HookTable(lam, hooks)


def hook_lengths(lam: Partition) -> list[int]:
    return list(hook_table(lam).hooks.values())


# Beta-numbers. Sequences are plain tuples; the canonical form is strictly decreasing.

BetaSequence = tuple[int, ...]


def beta_sequence(lam: Partition, m: int | None = None) -> BetaSequence:
    """Strictly decreasing beta-numbers ``(lam_i + m - i)`` of length ``m`` (default: number of parts)."""
    if m is None:
        m = len(lam)
    if m < len(lam):
        raise PartitionError(f"beta length {m} is shorter than the {len(lam)} parts of {lam}")
    return _beta(lam.parts, m)


@lru_cache(maxsize=None)
def _beta(parts: tuple[int, ...], m: int) -> BetaSequence:
    padded = parts + (0,) * (m - len(parts))
    return tuple(p + m - 1 - i for i, p in enumerate(padded))


def part_tuple(beta: Iterable[int]) -> tuple[int, ...]:
    """Parts of Part(beta) as a tuple; no validation, for hot loops."""
    b = sorted(beta, reverse=True)
    m = len(b)
    parts = [x - (m - 1 - i) for i, x in enumerate(b)]
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(parts)


def part_of_beta(beta: Sequence[int]) -> Partition:
    """The partition encoded by a sequence of distinct non-negative integers (order-insensitive)."""
    if any(b < 0 for b in beta):
        raise PartitionError(f"beta-numbers must be non-negative: {tuple(beta)}")
    if len(set(beta)) != len(beta):
        raise PartitionError(f"beta-numbers must be distinct: {tuple(beta)}")
    return Partition(part_tuple(beta))


def distance(lam: Partition, mu: Partition, m: int | None = None) -> int:
    """Number of beta-numbers of ``lam`` absent from those of ``mu`` at a common length."""
    if m is None:
        m = max(len(lam), len(mu))
    return beta_mismatch(beta_sequence(lam, m), beta_sequence(mu, m))


def beta_mismatch(beta: Sequence[int], other: Sequence[int]) -> int:
    other_set = set(other)
    return sum(1 for b in beta if b not in other_set)


def partitions_of(n: int) -> Iterator[Partition]:
    """Every partition of n once, in reverse-lexicographic order."""
    for parts in partition_tuples(n):
        yield Partition(parts)


def partition_tuples(n: int) -> Iterator[tuple[int, ...]]:
    if n < 0:
        raise PartitionError(f"n must be non-negative, got {n}")
    if n == 0:
        yield ()
        return
    # Classic successor algorithm on the multiplicity-free list form.
    a = [n]
    while True:
        yield tuple(a)
        # find rightmost part > 1
        i = len(a) - 1
        while i >= 0 and a[i] == 1:
            i -= 1
        if i < 0:
            return
        rem = len(a) - i  # parts from i on: a[i] plus the trailing ones
        k = a[i] - 1
        total = k + rem
        del a[i:]
        while total >= k:
            a.append(k)
            total -= k
        if total:
            a.append(total)


def count_partitions(n: int) -> int:
    """p(n) via Euler's pentagonal-number recurrence."""
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total, k = 0, 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]
