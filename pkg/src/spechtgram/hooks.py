"""Hook-length dimension, q-cores, the parity recursion, the D-map and oddness rank."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod

from .partitions import Partition, _beta, hook_lengths, part_tuple


def dimension(lam: Partition) -> int:
    """f_lambda = n! / prod of hook lengths; f of the empty partition is 1."""
    numerator = factorial(lam.n)
    denominator = prod(hook_lengths(lam))
    f, rest = divmod(numerator, denominator)
    assert rest == 0, f"hook product does not divide {lam.n}! for {lam}"
    return f


@dataclass(frozen=True)
class CoreResult:
    core: Partition
    # (cell, hook length) in the original diagram's coordinates at the time of removal
    removed_hooks: tuple[tuple[tuple[int, int], int], ...]


def core(lam: Partition, q: int) -> CoreResult:
    """Strip q-hooks until none remain, always moving the largest eligible bead first."""
    if q < 1:
        raise ValueError(f"q must be positive, got {q}")
    m = len(lam)
    beta = set(_beta(lam.parts, m))
    removed = []
    while True:
        eligible = [b for b in beta if b >= q and b - q not in beta]
        if not eligible:
            break
        b = max(eligible)
        removed.append((_hook_cell(beta, b, q), q))
        beta.remove(b)
        beta.add(b - q)
    return CoreResult(Partition(part_tuple(beta)), tuple(removed))


def _hook_cell(beta: set[int], b: int, q: int) -> tuple[int, int]:
    # Row of bead b; the hooks of that row pair b with the gaps below it, smallest gap first.
    row = 1 + sum(1 for x in beta if x > b)
    col = 1 + sum(1 for g in range(b - q) if g not in beta)
    return (row, col)


def two_power_r(n: int) -> int:
    """r with 2**r <= n < 2**(r+1)."""
    if n < 1:
        raise ValueError(f"two_power_r needs n >= 1, got {n}")
    return n.bit_length() - 1


@lru_cache(maxsize=None)
def _d_tuple(parts: tuple[int, ...]) -> tuple[int, ...]:
    n = sum(parts)
    if n == 0:
        return ()
    q = 1 << two_power_r(n)
    beta = _beta(parts, len(parts))
    present = set(beta)
    hits = [b for b in beta if b >= q and b - q not in present]
    assert len(hits) <= 1, f"more than one {q}-hook in {parts}"
    if not hits:
        return parts
    b = hits[0]
    return part_tuple([x if x != b else b - q for x in beta])


def d_map(lam: Partition) -> Partition:
    """Remove the unique 2^r-hook if there is one; identity otherwise."""
    return Partition(_d_tuple(lam.parts))


@lru_cache(maxsize=None)
def _is_odd_tuple(parts: tuple[int, ...]) -> bool:
    if not parts:
        return True
    image = _d_tuple(parts)
    if image == parts:
        return False
    return _is_odd_tuple(image)


def is_odd(lam: Partition) -> bool:
    """Parity of f_lambda by recursive 2^r-hook removal."""
    return _is_odd_tuple(lam.parts)


def odd_rank(lam: Partition) -> int:
    parts, steps = lam.parts, 0
    while True:
        image = _d_tuple(parts)
        if image == parts:
            return steps
        parts, steps = image, steps + 1


def binary_weight(n: int) -> int:
    return bin(n).count("1")
