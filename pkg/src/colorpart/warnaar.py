"""A weight-preserving bijection (alpha, beta) <-> (nu, d).

``alpha`` has distinct nonnegative parts, ``beta`` distinct positive parts,
``d = len(alpha) - len(beta)``, ``nu`` is an ordinary partition, and

    |alpha| + |beta| = |nu| + d(d-1)/2.

Construction: with ``a = len(alpha)`` and ``b = len(beta)``, strip the
staircases ``(a-1, ..., 1, 0)`` from alpha and ``(b, ..., 2, 1)`` from beta,
leaving partitions ``A`` (at most ``a`` parts) and ``B`` (at most ``b``
parts).  Since ``C(a,2) + C(b+1,2) - C(a-b,2) = ab``, ``nu`` is an ``a x b``
rectangle with ``A`` glued onto its rows and the conjugate of ``B`` stacked
underneath.  The inverse recovers ``a`` as the number of rows ``j`` with
``nu_j - j >= -d``.
"""
from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from .partitions import conjugate, in_D, in_D0, in_P

__all__ = ["WarnaarTriple", "WeightedPair", "warnaar_forward", "warnaar_inverse", "binom2"]


class WarnaarTriple(NamedTuple):
    alpha: tuple
    beta: tuple
    d: int


class WeightedPair(NamedTuple):
    nu: tuple
    d: int


def binom2(d: int) -> int:
    return d * (d - 1) // 2


def warnaar_forward(alpha, beta) -> WeightedPair:
    alpha, beta = tuple(alpha), tuple(beta)
    if not in_D0(alpha):
        raise ValueError(f"alpha={alpha!r} must have distinct nonnegative parts")
    if not in_D(beta):
        raise ValueError(f"beta={beta!r} must have distinct positive parts")
    return _forward(alpha, beta)


# Per-class inputs repeat heavily across partitions, so both directions are cached.
@lru_cache(maxsize=1 << 18)
def _forward(alpha: tuple, beta: tuple) -> WeightedPair:
    a, b = len(alpha), len(beta)
    rows = [b + alpha[j] - (a - 1 - j) for j in range(a)]
    B = tuple(beta[j] - (b - j) for j in range(b))
    rows.extend(conjugate(B))
    nu = tuple(x for x in rows if x > 0)
    return WeightedPair(nu, a - b)


def warnaar_inverse(nu, d: int) -> WarnaarTriple:
    nu = tuple(nu)
    if not in_P(nu):
        raise ValueError(f"nu={nu!r} must be a partition into positive parts")
    return _inverse(nu, d)


@lru_cache(maxsize=1 << 18)
def _inverse(nu: tuple, d: int) -> WarnaarTriple:
    ell = len(nu)
    # nu_j - j is strictly decreasing, so the rows with nu_j - j >= -d form a prefix.
    a = 0
    while (nu[a] if a < ell else 0) - (a + 1) >= -d:
        a += 1
    b = a - d
    alpha = tuple((nu[j] if j < ell else 0) - b + (a - 1 - j) for j in range(a))
    B = conjugate(nu[a:])
    B = B + (0,) * (b - len(B))
    beta = tuple(B[j] + (b - j) for j in range(b))
    return WarnaarTriple(alpha, beta, d)
