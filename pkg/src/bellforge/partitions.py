"""Partition enumeration and independent partition-count oracles.

Partitions of ``n`` are represented as multiplicity vectors
``(k_1, ..., k_n)`` with ``sum j*k_j == n``; for ``n == 0`` the vector is
empty.  The enumeration order is fixed: lexicographically decreasing on the
reversed vector ``(k_n, ..., k_1)``, so the one-part partition comes first
and the all-ones partition last.  Golden tests rely on this order.
"""

from __future__ import annotations

import threading
from typing import Iterator

from .arith import require_natural

PartitionVector = tuple[int, ...]


def iter_partitions(n: int) -> Iterator[PartitionVector]:
    """Yield every multiplicity vector of ``n`` exactly once.

    >>> list(iter_partitions(4))[0]
    (0, 0, 0, 1)
    """
    require_natural(n)
    if n == 0:
        yield ()
        return
    ks = [0] * (n + 1)
    j, rem = n, n
    while True:
        # descend, giving each part size the largest multiplicity left
        while j >= 2:
            k = rem // j
            ks[j] = k
            rem -= j * k
            j -= 1
        ks[1] = rem
        yield tuple(ks[1:])
        # backtrack to the smallest part size >= 2 with a nonzero count
        j = 2
        while j <= n and ks[j] == 0:
            j += 1
        if j > n:
            return
        ks[j] -= 1
        rem += j
        j -= 1


_pent_lock = threading.Lock()
_pent_table = [1]


def count_partitions(n: int) -> int:
    """Number of partitions of ``n`` via the pentagonal-number recurrence

        p(n) = sum_{k>=1} (-1)^(k+1) [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)]

    with p(0) = 1 and p(m) = 0 for m < 0.  Memoized; results never change.
    """
    require_natural(n)
    if n < len(_pent_table):
        return _pent_table[n]
    with _pent_lock:
        while len(_pent_table) <= n:
            _pent_table.append(_pentagonal_step(_pent_table))
    return _pent_table[n]


def pentagonal_values(n: int) -> list[int]:
    """Fresh, unmemoized table ``[p(0), ..., p(n)]`` (used for benchmarking)."""
    require_natural(n)
    table = [1]
    while len(table) <= n:
        table.append(_pentagonal_step(table))
    return table


def _pentagonal_step(table: list[int]) -> int:
    m = len(table)
    total = 0
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > m:
            break
        sign = 1 if k % 2 else -1
        total += sign * table[m - g1]
        g2 = k * (3 * k + 1) // 2
        if g2 <= m:
            total += sign * table[m - g2]
        k += 1
    return total


def count_exact_parts(n: int, m: int) -> int:
    """Number of partitions of ``n`` into exactly ``m`` parts, from the
    recurrence p_m(n) = p_m(n-m) + p_{m-1}(n-1)."""
    require_natural(n)
    require_natural(m, "m")
    if m > n:
        return 0
    if m == 0:
        return 1 if n == 0 else 0
    # row[j] holds p_j(i) while sweeping i upward
    rows = [[0] * (n + 1) for _ in range(m + 1)]
    rows[0][0] = 1
    for j in range(1, m + 1):
        for i in range(j, n + 1):
            rows[j][i] = rows[j][i - j] + rows[j - 1][i - 1]
    return rows[m][n]


def count_restricted_bruteforce(n: int, parts) -> int:
    """Number of multisets over ``parts`` summing to ``n``, by exhaustive
    recursion over how often each allowed part is used."""
    require_natural(n)
    allowed = list(parts)
    if not allowed:
        raise ValueError("parts must be non-empty")
    if len(set(allowed)) != len(allowed):
        raise ValueError("parts must be distinct")
    if min(allowed) < 1:
        raise ValueError("parts must be >= 1")
    allowed.sort(reverse=True)
    seen: dict[tuple[int, int], int] = {}

    def rec(m: int, i: int) -> int:
        if m == 0:
            return 1
        if i == len(allowed):
            return 0
        key = (m, i)
        cached = seen.get(key)
        if cached is not None:
            return cached
        total = rec(m, i + 1)
        if allowed[i] <= m:
            total += rec(m - allowed[i], i)
        seen[key] = total
        return total

    return rec(n, 0)
