"""Brute-force Specht module: standard polytabloids, their Gram matrix and its exact determinant.

Tabloids are encoded as the tuple ``rows[k]`` giving the row (0-based) that holds the
letter ``k + 1``; this is canonical, since order within a row is forgotten.
"""

from __future__ import annotations

from itertools import permutations, product
from math import factorial, prod

from .partitions import Partition

DEFAULT_BUDGET = 10**6

Tableau = tuple[tuple[int, ...], ...]
Tabloid = tuple[int, ...]


class BudgetExceeded(RuntimeError):
    pass


def standard_tableaux(lam: Partition) -> list[Tableau]:
    """All standard tableaux of shape ``lam``, sorted by row-reading word."""
    shape = lam.parts
    n = lam.n
    out: list[Tableau] = []
    rows: list[list[int]] = [[] for _ in shape]

    def place(k: int) -> None:
        if k > n:
            out.append(tuple(tuple(r) for r in rows))
            return
        for i, row in enumerate(rows):
            if len(row) < shape[i] and (i == 0 or len(rows[i - 1]) > len(row)):
                row.append(k)
                place(k + 1)
                row.pop()

    place(1)
    out.sort(key=lambda t: [x for row in t for x in row])
    return out


def _columns(t: Tableau) -> list[tuple[int, ...]]:
    width = len(t[0]) if t else 0
    return [tuple(row[j] for row in t if len(row) > j) for j in range(width)]


def _sign(perm: tuple[int, ...]) -> int:
    sign, seen = 1, [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def polytabloid(t: Tableau) -> dict[Tabloid, int]:
    """e_t = sum over the column stabiliser of sign(sigma) {t sigma}, zero terms dropped."""
    n = sum(len(r) for r in t)
    row_of = [0] * n
    for i, row in enumerate(t):
        for x in row:
            row_of[x - 1] = i
    cols = _columns(t)
    col_perms = [[(p, _sign(p)) for p in permutations(range(len(c)))] for c in cols]
    out: dict[Tabloid, int] = {}
    for choice in product(*col_perms):
        rows = row_of[:]
        sign = 1
        for c, (perm, s) in zip(cols, choice):
            sign *= s
            # letter c[i] moves to the cell of c[perm[i]]
            for i, src in enumerate(c):
                rows[src - 1] = row_of[c[perm[i]] - 1]
        key = tuple(rows)
        out[key] = out.get(key, 0) + sign
    return {k: v for k, v in out.items() if v}


def column_stabilizer_order(lam: Partition) -> int:
    return prod(factorial(c) for c in lam.conjugate().parts)


def tabloid_count(lam: Partition) -> int:
    return factorial(lam.n) // prod(factorial(p) for p in lam.parts)


def gram_matrix(
    lam: Partition, budget: int = DEFAULT_BUDGET, basis: list[Tableau] | None = None
) -> list[list[int]]:
    """Gram matrix of the permutation-module inner product on the standard polytabloids."""
    if tabloid_count(lam) > budget:
        raise BudgetExceeded(
            f"{lam} has {tabloid_count(lam)} tabloids, over the budget of {budget} (raise --budget)"
        )
    if basis is None:
        basis = standard_tableaux(lam)
    vecs = [polytabloid(t) for t in basis]
    f = len(vecs)
    gram = [[0] * f for _ in range(f)]
    for i in range(f):
        vi = vecs[i]
        for j in range(i, f):
            vj = vecs[j]
            small, big = (vi, vj) if len(vi) <= len(vj) else (vj, vi)
            s = sum(c * big.get(k, 0) for k, c in small.items())
            gram[i][j] = gram[j][i] = s
    return gram


def bareiss_minors(matrix: list[list[int]]) -> list[int]:
    """Leading principal minors by fraction-free elimination without pivoting.

    Stops early (returning the minors so far plus a 0) if a leading minor vanishes.
    """
    a = [row[:] for row in matrix]
    size = len(a)
    minors = []
    prev = 1
    for k in range(size):
        pivot = a[k][k]
        minors.append(pivot)
        if pivot == 0:
            return minors
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
        prev = pivot
    return minors


def determinant(matrix: list[list[int]]) -> int:
    """Exact integer determinant by Bareiss elimination with row pivoting."""
    a = [row[:] for row in matrix]
    size = len(a)
    if size == 0:
        return 1
    sign, prev = 1, 1
    for k in range(size - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, size) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


def is_positive_definite(matrix: list[list[int]]) -> bool:
    minors = bareiss_minors(matrix)
    return len(minors) == len(matrix) and all(m > 0 for m in minors)


def gram_determinant(lam: Partition, budget: int = DEFAULT_BUDGET) -> int:
    det = determinant(gram_matrix(lam, budget))
    assert det > 0, f"Gram determinant of {lam} is not positive: {det}"
    return det


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def p_valuation(value: int, p: int) -> int:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if value < 1:
        raise ValueError(f"valuation needs a positive integer, got {value}")
    k = 0
    while value % p == 0:
        value //= p
        k += 1
    return k


def factorize(value: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= value:
        while value % d == 0:
            out[d] = out.get(d, 0) + 1
            value //= d
        d += 1
    if value > 1:
        out[value] = out.get(value, 0) + 1
    return out
