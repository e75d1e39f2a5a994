"""Colored partitions of N <-> solution tuples (nu_1..nu_t; d_1..d_t).

A solution tuple over a system ``(C; A)`` has value

    sum C_i |nu_i| + sum C_i d_i(d_i-1)/2 + sum A_i d_i

and counts only when ``sum d_i`` is odd.  Each colored partition corresponds
to exactly ``2**system.r`` such tuples.
"""
from __future__ import annotations

from itertools import product
from typing import Iterator, NamedTuple

from .colored import MINUS, PLUS, ColoredPart, ResidueSystem, canonical
from .partitions import _all_partitions, partition_count
from .warnaar import _forward, _inverse, binom2

__all__ = [
    "SolutionTuple",
    "tuple_value",
    "split",
    "solutions_for",
    "partition_for",
    "flip",
    "d_contribution",
    "d_range",
    "iter_d_vectors",
    "enumerate_solutions",
    "count_solutions",
    "partition_tuple_counts",
    "TupleRecord",
    "tuple_identity_check",
]


class SolutionTuple(NamedTuple):
    nus: tuple
    ds: tuple


def d_contribution(c: int, a: int, d: int) -> int:
    return c * binom2(d) + a * d


def tuple_value(system: ResidueSystem, tup) -> int:
    nus, ds = tup
    return sum(
        c * sum(nu) + d_contribution(c, a, d)
        for c, a, nu, d in zip(system.C, system.A, nus, ds)
    )


def split(system: ResidueSystem, pi) -> list[tuple[tuple, tuple]]:
    """Per class, the plus-copy values and the minus-copy values of ``pi``."""
    lam = [[] for _ in range(system.t)]
    mu = [[] for _ in range(system.t)]
    for value, cls, sign in pi:
        (lam if sign == PLUS else mu)[cls - 1].append(value)
    return [(tuple(sorted(l, reverse=True)), tuple(sorted(m, reverse=True))) for l, m in zip(lam, mu)]


def _exact_div(x: int, c: int) -> int:
    q, rem = divmod(x, c)
    if rem:
        raise ArithmeticError(f"{x} is not divisible by {c}: malformed colored part")
    return q


def solutions_for(system: ResidueSystem, pi) -> list[SolutionTuple]:
    """The ``2**r`` solution tuples of ``pi`` with odd d-sum, canonically ordered.

    For classes with ``A_i = 0`` both ``lambda*`` and ``lambda*`` with an
    appended 0 are used; the choices run lexicographically (bare first).
    """
    per_class = []
    zero_classes = False
    for (lam, mu), c, a in zip(split(system, pi), system.C, system.A):
        lam_star = tuple(_exact_div(x - a, c) for x in lam)
        mu_star = tuple(_exact_div(x + a, c) for x in mu)
        if a == 0:
            zero_classes = True
            per_class.append((_forward(lam_star, mu_star), _forward(lam_star + (0,), mu_star)))
        else:
            per_class.append((_forward(lam_star, mu_star),))
    if not zero_classes:
        nus = tuple(pair[0] for pair, in per_class)
        ds = tuple(pair[1] for pair, in per_class)
        return [SolutionTuple(nus, ds)] if sum(ds) % 2 == 1 else []
    # Extend class by class; the first class varies slowest, as in itertools.product.
    combos = [((), (), 0)]
    for options in per_class:
        combos = [(nus + (nu,), ds + (d,), par ^ (d & 1)) for nus, ds, par in combos for nu, d in options]
    return [SolutionTuple(nus, ds) for nus, ds, par in combos if par]


def partition_for(system: ResidueSystem, tup) -> tuple:
    """The colored partition whose solution set contains ``tup``."""
    nus, ds = tup
    if len(nus) != system.t or len(ds) != system.t:
        raise ValueError(f"tuple has wrong length for t={system.t}")
    if sum(ds) % 2 == 0:
        raise ValueError(f"d-sum of {tuple(ds)} is even")
    parts = []
    for i, (nu, d, c, a) in enumerate(zip(nus, ds, system.C, system.A), start=1):
        alpha, beta, _ = _inverse(tuple(nu), d)
        for x in alpha:
            value = c * x + a
            if value == 0 and a == 0:
                continue  # the appended zero of a zero-residue class
            if value <= 0:
                raise ValueError(f"tuple yields part {value} in class {i}")
            parts.append(ColoredPart(value, i, PLUS))
        for x in beta:
            value = c * x - a
            if value <= 0:
                raise ValueError(f"tuple yields part {value} in class {i}")
            parts.append(ColoredPart(value, i, MINUS))
    return canonical(parts)


def flip(system: ResidueSystem, tup, i: int) -> SolutionTuple:
    """Replace ``d_i`` by ``1 - d_i`` for a zero-residue class ``i`` (1-based)."""
    if system.A[i - 1] != 0:
        raise ValueError(f"class {i} has nonzero residue {system.A[i - 1]}")
    nus, ds = tup
    ds = list(ds)
    ds[i - 1] = 1 - ds[i - 1]
    return SolutionTuple(tuple(nus), tuple(ds))


def d_range(c: int, a: int, budget: int) -> list[int]:
    """All d with C(d,2)c + a d <= budget, in increasing order.

    The contribution is convex in d and nonnegative when 0 <= a <= c/2, so the
    feasible set is an interval around 0.
    """
    if budget < 0:
        return []
    hi = 0
    while d_contribution(c, a, hi + 1) <= budget:
        hi += 1
    lo = 0
    while d_contribution(c, a, lo - 1) <= budget:
        lo -= 1
    return list(range(lo, hi + 1))


def iter_d_vectors(C, A, budget: int, contribution=d_contribution) -> Iterator[tuple[tuple, int]]:
    """Yield ``(ds, value)`` for every integer vector with value <= budget.

    ``contribution(c, a, d)`` must be nonnegative; vectors come out in
    lexicographic order.
    """
    t = len(C)
    tables = []
    for c, a in zip(C, A):
        col = []
        d = 0
        while contribution(c, a, d) <= budget:
            col.append(d)
            d -= 1
        d = 1
        while contribution(c, a, d) <= budget:
            col.append(d)
            d += 1
        col.sort()
        tables.append([(d, contribution(c, a, d)) for d in col])

    def walk(i: int, rem: int, acc: tuple):
        if i == t:
            yield acc, budget - rem
            return
        for d, q in tables[i]:
            if q <= rem:
                yield from walk(i + 1, rem - q, acc + (d,))

    yield from walk(0, budget, ())


def partition_tuple_counts(C, n_max: int) -> list[int]:
    """Number of tuples (nu_1..nu_t) with sum C_i |nu_i| = n, for n <= n_max."""
    out = [1] + [0] * n_max
    for c in C:
        new = [0] * (n_max + 1)
        for n in range(n_max + 1):
            if out[n]:
                for j in range(0, (n_max - n) // c + 1):
                    new[n + c * j] += out[n] * partition_count(j)
        out = new
    return out


def count_solutions(system: ResidueSystem, N: int) -> int:
    """Number of solution tuples of value N with odd d-sum."""
    if N < 0:
        return 0
    weights = partition_tuple_counts(system.C, N)
    return sum(
        weights[N - q]
        for ds, q in iter_d_vectors(system.C, system.A, N)
        if sum(ds) % 2 == 1
    )


def _size_vectors(C, n: int) -> Iterator[tuple]:
    if not C:
        if n == 0:
            yield ()
        return
    c, rest = C[0], C[1:]
    for j in range(n // c, -1, -1):
        for tail in _size_vectors(rest, n - c * j):
            yield (j,) + tail


def _iter_partition_tuples(C, n: int) -> Iterator[tuple]:
    """Tuples (nu_1..nu_t) with sum C_i |nu_i| = n."""
    for sizes in _size_vectors(tuple(C), n):
        yield from product(*[_all_partitions(j) for j in sizes])


def enumerate_solutions(system: ResidueSystem, N: int, offset: int = 0) -> Iterator[SolutionTuple]:
    """All solution tuples of value ``N - offset`` with odd d-sum."""
    target = N - offset
    if target < 0:
        return
    for ds, q in iter_d_vectors(system.C, system.A, target):
        if sum(ds) % 2 == 1:
            for nus in _iter_partition_tuples(system.C, target - q):
                yield SolutionTuple(nus, ds)


class TupleRecord(NamedTuple):
    N: int
    lhs: int
    rhs: int

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs


def tuple_identity_check(preset, N_max: int) -> list[TupleRecord]:
    """Count LHS tuples (S-system, value N) and RHS tuples (T-system, value N - m)."""
    return [
        TupleRecord(N, count_solutions(preset.S, N), count_solutions(preset.T, N - preset.m))
        for N in range(preset.N0, N_max + 1)
    ]
