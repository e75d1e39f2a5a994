"""Exact partition primitives.

Partitions are plain tuples of ints in weakly decreasing order; ``()`` is the
empty partition of 0.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Mapping, Optional

__all__ = [
    "is_partition",
    "in_P",
    "in_D",
    "in_D0",
    "weight",
    "conjugate",
    "partition_count",
    "generalized_pentagonal",
    "pentagonal_alternating_sum",
    "pentagonal_involution",
    "enumerate_partitions",
    "iter_partitions",
    "level_set",
]

_p_memo = [1]


def is_partition(parts) -> bool:
    return all(x >= 0 for x in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def in_P(parts) -> bool:
    return is_partition(parts) and all(x >= 1 for x in parts)


def in_D0(parts) -> bool:
    return all(x >= 0 for x in parts) and all(
        parts[i] > parts[i + 1] for i in range(len(parts) - 1)
    )


def in_D(parts) -> bool:
    return in_D0(parts) and all(x >= 1 for x in parts)


def weight(parts) -> int:
    return sum(parts)


def conjugate(parts) -> tuple:
    """Conjugate of a partition; zero parts are ignored."""
    if not parts or parts[0] <= 0:
        return ()
    return tuple(sum(1 for x in parts if x >= j) for j in range(1, parts[0] + 1))


def generalized_pentagonal(f: int) -> int:
    return f * (3 * f - 1) // 2


def partition_count(n: int) -> int:
    """p(n) via Euler's pentagonal recurrence; 0 for negative n."""
    if n < 0:
        return 0
    memo = _p_memo
    # Appends are the only mutation, so concurrent readers see a valid prefix.
    for m in range(len(memo), n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * memo[m - g1]
            g2 = g1 + k
            if g2 <= m:
                total += sign * memo[m - g2]
            k += 1
        memo.append(total)
    return memo[n]


def _pentagonal_range(n: int) -> range:
    """All f with f(3f-1)/2 <= n (empty for n < 0)."""
    if n < 0:
        return range(0)
    lo = 0
    while generalized_pentagonal(lo - 1) <= n:
        lo -= 1
    hi = 0
    while generalized_pentagonal(hi + 1) <= n:
        hi += 1
    return range(lo, hi + 1)


def pentagonal_alternating_sum(n: int) -> int:
    """sum_f (-1)^f p(n - f(3f-1)/2); this is [n == 0]."""
    return sum(
        (-1 if f % 2 else 1) * partition_count(n - generalized_pentagonal(f))
        for f in _pentagonal_range(n)
    )


def pentagonal_involution(n: int, mu: tuple, f: int) -> tuple[tuple, int]:
    """Sign-reversing involution on {(mu, f) : |mu| + f(3f-1)/2 = n}.

    This is the Bressoud-Zeilberger map written for the index j = -f, where
    j(3j+1)/2 = f(3f-1)/2.  Let l = len(mu) and m = mu[0] (0 if empty):

    * if 3j + l >= m:  (mu, j) -> ((3j + l - 1, mu_1 - 1, ..., mu_l - 1), j - 1)
    * otherwise:       (mu, j) -> ((mu_2 + 1, ..., mu_l + 1, 1^(m - 3j - l - 1)), j + 1)

    Zero parts produced by the first rule are dropped, and an empty ``mu``
    with j < 0 is treated as ``(0,)`` of length one.  The map has no fixed
    points for n >= 1 and always changes the parity of f.
    """
    if n <= 0:
        raise ValueError(f"level n must be positive, got {n}")
    if not in_P(mu):
        raise ValueError(f"{mu!r} is not a partition into positive parts")
    if sum(mu) + generalized_pentagonal(f) != n:
        raise ValueError(f"|mu| + f(3f-1)/2 != {n} for mu={mu!r}, f={f}")
    return _pentagonal_step(mu, f)


def _pentagonal_step(mu: tuple, f: int) -> tuple[tuple, int]:
    """The involution without input checks; callers guarantee n >= 1."""
    j = -f
    ell = len(mu)
    top = mu[0] if mu else 0
    if not mu and j < 0:
        # Read the empty partition as (0) here; the generic rule needs a first part.
        new = (1,) * (-3 * j - 2)
        new_j = j + 1
    elif 3 * j + ell >= top:
        new = tuple(x for x in (3 * j + ell - 1,) + tuple(y - 1 for y in mu) if x > 0)
        new_j = j - 1
    else:
        new = tuple(x + 1 for x in mu[1:]) + (1,) * (top - 3 * j - ell - 1)
        new_j = j + 1
    return new, -new_j


def level_set(n: int) -> list[tuple[tuple, int]]:
    """All (mu, f) with |mu| + f(3f-1)/2 = n, mu in P."""
    out = []
    for f in _pentagonal_range(n):
        for mu in _all_partitions(n - generalized_pentagonal(f)):
            out.append((mu, f))
    return out


def _gen(n: int, cap: int, step: int, universe: Optional[Mapping[int, int]]) -> Iterator[tuple]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, cap), 0, -1):
        if universe is None:
            limit = n // first if step == 0 else 1
        else:
            limit = min(universe.get(first, 0), n // first)
        for reps in range(limit, 0, -1):
            head = (first,) * reps
            for tail in _gen(n - first * reps, first - 1, step, universe):
                yield head + tail


def iter_partitions(n: int) -> Iterator[tuple]:
    """Partitions of n, generated lazily in lexicographically decreasing order.

    Zoghbi and Stojmenovic's ZS1: x[1..m] holds the current partition and h
    indexes its last part larger than 1.
    """
    if n < 0:
        return
    if n == 0:
        yield ()
        return
    x = [1] * (n + 1)
    x[1] = n
    m = h = 1
    yield (n,)
    while x[1] != 1:
        if x[h] == 2:
            m += 1
            x[h] = 1
            h -= 1
        else:
            r = x[h] - 1
            t = m - h + 1
            x[h] = r
            while t >= r:
                h += 1
                x[h] = r
                t -= r
            if t == 0:
                m = h
            else:
                m = h + 1
                if t > 1:
                    h += 1
                    x[h] = t
        yield tuple(x[1:m + 1])


@lru_cache(maxsize=256)
def _all_partitions(n: int) -> tuple:
    return tuple(iter_partitions(n))


def enumerate_partitions(
    n: int,
    constraint: str = "all",
    universe: Optional[Mapping[int, int]] = None,
) -> list[tuple]:
    """All partitions of ``n`` in lexicographically decreasing order.

    ``constraint`` is ``"all"``, ``"distinct"``, or ``"multiset"``; the last
    draws each value ``v`` at most ``universe[v]`` times.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if constraint == "all":
        return list(_all_partitions(n))
    if constraint == "distinct":
        return list(_gen(n, n, 1, None))
    if constraint == "multiset":
        if universe is None:
            raise ValueError("constraint 'multiset' needs a universe mapping")
        return list(_gen(n, n, 1, universe))
    raise ValueError(f"unknown constraint {constraint!r}")
