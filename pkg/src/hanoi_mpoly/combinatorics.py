"""Arbitrary-precision combinatorial primitives.

Stirling tables are stored row by row and extended on demand; once a row
exists it is never mutated, so readers need no locking. Growth happens
under a single lock.
"""

from __future__ import annotations

import math
import threading
from functools import lru_cache

from hanoi_mpoly.errors import DomainError

#: Largest ``n`` any table will be grown to.
MAX_N = 4096

_lock = threading.Lock()
# _S2[n][k] = {n brace k}, 0 <= k <= n
_S2: list[list[int]] = [[1]]
# _A2[n][k] = {n brace k}_{>=2}, 0 <= k <= n // 2
_A2: list[list[int]] = [[1], [0]]


def _check(n: int, k: int) -> None:
    if n < 0 or k < 0:
        raise DomainError(f"arguments must be nonnegative, got ({n}, {k})")
    if n > MAX_N:
        raise DomainError(f"n={n} exceeds the table guard MAX_N={MAX_N}")


def _grow_s2(n: int) -> None:
    with _lock:
        while len(_S2) <= n:
            prev = _S2[-1]
            m = len(prev)  # new row index
            row = [0] * (m + 1)
            for k in range(1, m + 1):
                left = prev[k] if k < m else 0
                row[k] = k * left + prev[k - 1]
            _S2.append(row)


def _grow_a2(n: int) -> None:
    with _lock:
        while len(_A2) <= n:
            m = len(_A2)
            prev, prev2 = _A2[m - 1], _A2[m - 2]
            row = [0] * (m // 2 + 1)
            for k in range(1, m // 2 + 1):
                a = prev[k] if k < len(prev) else 0
                b = prev2[k - 1] if k - 1 < len(prev2) else 0
                row[k] = k * a + (m - 1) * b
            _A2.append(row)


@lru_cache(maxsize=None)
def binomial(n: int, k: int) -> int:
    """``C(n, k)``, zero when ``k > n``."""
    _check(n, k)
    return math.comb(n, k)


@lru_cache(maxsize=None)
def falling_factorial(p: int, mu: int) -> int:
    """``p (p-1) ... (p-mu+1)``; 1 for ``mu == 0`` and 0 for ``mu > p``."""
    _check(p, mu)
    return math.perm(p, mu)


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind ``{n brace k}``."""
    _check(n, k)
    if k > n:
        return 0
    if len(_S2) <= n:
        _grow_s2(n)
    return _S2[n][k]


def stirling2_assoc2(n: int, k: int) -> int:
    """Partitions of an ``n``-set into ``k`` blocks, every block of size >= 2.

    ``(0, 0)`` gives 1 and any ``n < 2k`` gives 0.
    """
    _check(n, k)
    if 2 * k > n:
        return 0
    if len(_A2) <= n:
        _grow_a2(n)
    return _A2[n][k]
