"""Garsia-Milne path following: lift U_N <-> V_N to S_N <-> T_N.

A star element pairs a tuple of partitions with a payload.  U-star
elements carry a d-tuple (then they lie in S_N) or an odd-sum pentagonal
tuple; V-star elements carry an e-tuple (then they lie in T_N) or an
even-sum pentagonal tuple.  ``f*`` applies the U/V bijection to the payload
and leaves the partitions alone; ``g`` pairs pentagonal elements across the
sides with a sign-reversing involution.  Following ``f*`` and ``g``
alternately from an element of S_N always ends in T_N.
"""
from __future__ import annotations

from functools import partial
from typing import Iterator, NamedTuple, Optional

from .colored import IdentityPreset, get_preset
from .master import (
    SolutionTuple,
    _iter_partition_tuples,
    count_solutions,
    enumerate_solutions,
    iter_d_vectors,
    partition_for,
    solutions_for,
    tuple_value,
)
from .partitions import _pentagonal_step
from .tuple_maps import (
    LatticeTuple,
    PentagonalTuple,
    _pent_contribution,
    _uv,
    _vu,
    kim_inverse,
    kim_map,
    payload_value,
    uv_bijection,
    vu_bijection,
)

__all__ = [
    "StarElement",
    "g_map",
    "f_star",
    "f_star_inverse",
    "lift_element",
    "lift_inverse_element",
    "lift",
    "iter_star_pentagonal",
    "end_to_end",
    "end_to_end_inverse",
    "LiftError",
]


class LiftError(RuntimeError):
    """A path that does not terminate or a table that is not a bijection."""


class StarElement(NamedTuple):
    partitions: tuple
    payload: object  # LatticeTuple or PentagonalTuple

    @property
    def side(self) -> str:
        p = self.payload
        if isinstance(p, PentagonalTuple):
            return "U" if p.parity == 1 else "V"
        return "U" if p.kind == "d" else "V"

    @property
    def is_endpoint(self) -> bool:
        """True for elements of S_N or T_N."""
        return not isinstance(self.payload, PentagonalTuple)

    def weight(self, preset) -> int:
        preset = _preset(preset)
        return sum(c * sum(mu) for c, mu in zip(preset.S.C, self.partitions)) + payload_value(
            preset, self.payload
        )


def _preset(preset) -> IdentityPreset:
    return get_preset(preset) if isinstance(preset, str) else preset


def g_map(element: StarElement) -> StarElement:
    """Pair a pentagonal star element with one on the other side.

    Acts on the first index i with n_i = |mu_i| + f_i(3 f_i - 1)/2 > 0.
    """
    payload = element.payload
    if not isinstance(payload, PentagonalTuple):
        raise ValueError("g_map acts only on pentagonal payloads")
    parts = element.partitions
    f = payload.f
    for i, (mu, fi) in enumerate(zip(parts, f)):
        if mu or fi:  # n_i = |mu_i| + f_i(3f_i-1)/2 vanishes only when both are trivial
            new_mu, new_f = _pentagonal_step(mu, fi)
            return StarElement(
                parts[:i] + (new_mu,) + parts[i + 1:],
                PentagonalTuple(f[:i] + (new_f,) + f[i + 1:], payload.copy),
            )
    raise ValueError("every n_i is zero; g is undefined at N = k")


def f_star(preset, element: StarElement) -> StarElement:
    return StarElement(element.partitions, uv_bijection(preset, element.payload))


def f_star_inverse(preset, element: StarElement) -> StarElement:
    return StarElement(element.partitions, vu_bijection(preset, element.payload))


def _follow(step, element: StarElement, trace: Optional[list], limit: int) -> StarElement:
    """Alternate ``step`` (a payload map) and g until an endpoint is reached."""
    seen = None
    x = element
    while True:
        y = StarElement(x.partitions, step(x.payload))
        if trace is not None:
            trace.append(("f*", y))
        if not isinstance(y.payload, PentagonalTuple):
            return y
        if seen is None:
            seen = set()
        if y in seen:
            raise LiftError(f"path from {element} revisits {y}")
        seen.add(y)
        x = g_map(y)
        if trace is not None:
            trace.append(("g", x))
        if len(seen) > limit:
            raise LiftError(f"path from {element} exceeds {limit} steps")


def lift_element(preset, s, trace: Optional[list] = None, limit: int = 10**6) -> SolutionTuple:
    """Image in T_N (as an RHS solution tuple) of an LHS solution tuple ``s``."""
    name = _preset(preset).name
    nus, ds = s
    start = StarElement(tuple(nus), LatticeTuple("d", tuple(ds)))
    end = _follow(partial(_uv, name), start, trace, limit)
    return SolutionTuple(end.partitions, end.payload.values)


def lift_inverse_element(preset, t, trace: Optional[list] = None, limit: int = 10**6) -> SolutionTuple:
    name = _preset(preset).name
    alphas, es = t
    start = StarElement(tuple(alphas), LatticeTuple("e", tuple(es)))
    end = _follow(partial(_vu, name), start, trace, limit)
    return SolutionTuple(end.partitions, end.payload.values)


def lift(preset, N: int) -> dict:
    """The full bijection table S_N -> T_N, checked to be a bijection."""
    preset = _preset(preset)
    if N < preset.N0:
        raise ValueError(f"N must be at least N0={preset.N0}")
    table = {}
    image = set()
    for s in enumerate_solutions(preset.S, N):
        t = lift_element(preset, s)
        if tuple_value(preset.T, t) + preset.m != N or sum(t.ds) % 2 != 1:
            raise LiftError(f"{s} lifted to {t}, which is not in T_{N}")
        if t in image:
            raise LiftError(f"{t} is hit twice")
        image.add(t)
        table[s] = t
    expected = count_solutions(preset.T, N - preset.m)
    if len(image) != expected:
        raise LiftError(f"image has {len(image)} elements, T_{N} has {expected}")
    return table


def iter_star_pentagonal(preset, N: int, side: str) -> Iterator[StarElement]:
    """Pentagonal-payload star elements of weight N on side ``"U"`` or ``"V"``."""
    preset = _preset(preset)
    parity = 1 if side == "U" else 0
    budget = N - preset.k
    if budget < 0:
        return
    C = preset.S.C
    for f, q in iter_d_vectors(C, preset.S.A, budget, _pent_contribution):
        if sum(f) % 2 != parity:
            continue
        for parts in _iter_partition_tuples(C, budget - q):
            for copy in range(1, preset.S_k_count + 1):
                yield StarElement(parts, PentagonalTuple(f, copy))


def _label(system, tau, tup) -> int:
    return solutions_for(system, tau).index(tup) + 1


def end_to_end(preset, pi, trace: Optional[list] = None) -> tuple[tuple, int]:
    """Send an S-partition of N to (T-partition of N - m, label).

    Labels run over 1..2**r_T, the position of the image tuple among the
    solution tuples of the T-partition.
    """
    preset = _preset(preset)
    sols = solutions_for(preset.S, pi)
    if len(sols) != 1:
        raise ValueError(f"expected a single LHS tuple, got {len(sols)}")
    s = sols[0]
    if preset.name in ("mod7", "mod3"):
        t = kim_map(s)
        if trace is not None:
            trace.append(("kim", t))
    elif preset.name in ("mod5", "mod11"):
        N = sum(p[0] for p in pi)
        if N < preset.N0:
            raise ValueError(f"|pi| = {N} is below N0={preset.N0}")
        t = lift_element(preset, s, trace)
    else:
        raise ValueError(f"no bijection is known for preset {preset.name!r}")
    tau = partition_for(preset.T, t)
    if trace is not None:
        trace.insert(0, ("lhs", s))
        trace.append(("rhs", t))
    return tau, _label(preset.T, tau, t)


def end_to_end_inverse(preset, tau, label: int, trace: Optional[list] = None) -> tuple:
    preset = _preset(preset)
    sols = solutions_for(preset.T, tau)
    if not 1 <= label <= len(sols):
        raise ValueError(f"label must be in 1..{len(sols)}")
    t = sols[label - 1]
    if preset.name in ("mod7", "mod3"):
        s = kim_inverse(t)
        if trace is not None:
            trace.append(("kim^-1", s))
    elif preset.name in ("mod5", "mod11"):
        s = lift_inverse_element(preset, t, trace)
    else:
        raise ValueError(f"no bijection is known for preset {preset.name!r}")
    if trace is not None:
        trace.insert(0, ("rhs", t))
        trace.append(("lhs", s))
    return partition_for(preset.S, s)
