"""Residue-class colored part universes and the counting function D_S(N).

A :class:`ResidueSystem` ``(C; A)`` yields, for every class ``i`` (1-based),
a plus-copy of the positive integers congruent to ``A_i`` mod ``C_i`` and a
minus-copy of those congruent to ``-A_i``.  The two copies stay distinct
colors even when the residue classes coincide.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Iterator, NamedTuple, Optional, Sequence

__all__ = [
    "ResidueSystem",
    "ColoredPart",
    "IdentityPreset",
    "PRESETS",
    "get_preset",
    "multiplicity",
    "colors",
    "enumerate_colored",
    "iter_colored",
    "count_D",
    "count_D_qseries",
    "identity_check",
    "IdentityRecord",
    "IdentityReport",
    "parse_system",
    "parse_colored",
    "format_colored",
    "canonical",
    "is_valid_colored",
]

PLUS = "+"
MINUS = "-"


@dataclass(frozen=True)
class ResidueSystem:
    C: tuple
    A: tuple

    def __post_init__(self):
        C = tuple(int(c) for c in self.C)
        A = tuple(int(a) for a in self.A)
        object.__setattr__(self, "C", C)
        object.__setattr__(self, "A", A)
        if not C or len(C) != len(A):
            raise ValueError("C and A must be nonempty and of equal length")
        for c, a in zip(C, A):
            if c < 1:
                raise ValueError(f"moduli must be positive, got {c}")
            if not 0 <= 2 * a <= c:
                raise ValueError(f"residue {a} outside [0, {c}/2]")

    @property
    def t(self) -> int:
        return len(self.C)

    @property
    def zero_count(self) -> int:
        return sum(1 for a in self.A if a == 0)

    @property
    def r(self) -> int:
        # |{A_i = 0}| - 1 with the convention |empty set| = 1
        return max(self.zero_count, 1) - 1

    @property
    def parity_required(self) -> bool:
        return self.zero_count == 0

    def spec(self) -> str:
        return "t={};C={};A={}".format(
            self.t, ",".join(map(str, self.C)), ",".join(map(str, self.A))
        )


class ColoredPart(NamedTuple):
    value: int
    cls: int  # 1-based class index
    sign: str  # "+" or "-"

    def sort_key(self):
        return (-self.value, self.cls, self.sign)

    def __str__(self):
        return f"{self.value}@{self.cls}{self.sign}"


def canonical(parts) -> tuple:
    """Colored parts sorted by decreasing value, then class, then sign."""
    return tuple(sorted((ColoredPart(*p) for p in parts), key=ColoredPart.sort_key))


def colors(system: ResidueSystem, n: int) -> list[tuple[int, str]]:
    """The (class, sign) colors available to the value ``n``."""
    out = []
    for i, (c, a) in enumerate(zip(system.C, system.A), start=1):
        if (n - a) % c == 0:
            out.append((i, PLUS))
        if (n + a) % c == 0:
            out.append((i, MINUS))
    return out


def multiplicity(system: ResidueSystem, n: int) -> int:
    return len(colors(system, n))


def is_valid_colored(system: ResidueSystem, parts) -> bool:
    seen = set()
    for p in parts:
        value, cls, sign = p
        if value < 1 or not 1 <= cls <= system.t or sign not in (PLUS, MINUS):
            return False
        c, a = system.C[cls - 1], system.A[cls - 1]
        if (value - (a if sign == PLUS else -a)) % c:
            return False
        if (value, cls, sign) in seen:
            return False
        seen.add((value, cls, sign))
    return True


def iter_colored(system: ResidueSystem, N: int) -> Iterator[tuple]:
    """Generate the partitions of :func:`enumerate_colored` lazily, in the same order.

    Values are taken in decreasing order and, for each value, color subsets
    by decreasing bitmask (first color in the top bit), which is exactly the
    canonical order; nothing is sorted or stored.
    """
    if N < 0:
        return
    palette = {v: [ColoredPart(v, i, s) for i, s in colors(system, v)] for v in range(1, N + 1)}
    subsets = {}
    for v, choices in palette.items():
        k = len(choices)
        subsets[v] = [
            tuple(choices[b] for b in range(k) if mask >> (k - 1 - b) & 1)
            for mask in range((1 << k) - 1, 0, -1)
        ]
    odd_only = system.parity_required

    def walk(rem: int, top: int, acc: tuple):
        if rem == 0:
            if not odd_only or len(acc) % 2 == 1:
                yield acc
            return
        for v in range(min(rem, top), 0, -1):
            for picked in subsets[v]:
                if v * len(picked) <= rem:
                    yield from walk(rem - v * len(picked), v - 1, acc + picked)

    yield from walk(N, N, ())


def enumerate_colored(system: ResidueSystem, N: int) -> list[tuple]:
    """All partitions of N into distinct colored parts, canonically ordered.

    Odd length is enforced when ``system.parity_required``.
    """
    return list(iter_colored(system, N))


def count_D(system: ResidueSystem, N: int) -> int:
    """D_S(N) by a memoized descent over part values."""
    if N < 0:
        return 0
    return _count_D(system, N, N, 0)


@lru_cache(maxsize=None)
def _mult(system: ResidueSystem, v: int) -> int:
    return multiplicity(system, v)


@lru_cache(maxsize=None)
def _count_D(system: ResidueSystem, rem: int, top: int, parity: int) -> int:
    # Partitions of rem using values <= top; parity is the length so far mod 2.
    if rem == 0:
        if system.parity_required:
            return 1 if parity == 1 else 0
        return 1
    if top == 0:
        return 0
    top = min(top, rem)
    total = 0
    m = _mult(system, top)
    for j in range(0, min(m, rem // top) + 1):
        total += comb(m, j) * _count_D(system, rem - j * top, top - 1, parity ^ (j & 1))
    return total


def count_D_qseries(system: ResidueSystem, N_max: int) -> list[int]:
    """Coefficients 0..N_max of the truncated product generating D_S.

    Without the parity rule this is prod (1 + q^n)^mult(n); with it, the odd
    part (prod (1 + q^n)^mult(n) - prod (1 - q^n)^mult(n)) / 2.
    """
    if N_max < 0:
        raise ValueError("N_max must be nonnegative")
    plus = [0] * (N_max + 1)
    minus = [0] * (N_max + 1)
    plus[0] = minus[0] = 1
    for n in range(1, N_max + 1):
        for _ in range(multiplicity(system, n)):
            for j in range(N_max, n - 1, -1):
                plus[j] += plus[j - n]
                minus[j] -= minus[j - n]
    if not system.parity_required:
        return plus
    out = []
    for a, b in zip(plus, minus):
        if (a - b) % 2:
            raise ArithmeticError("odd-part extraction is not exact")
        out.append((a - b) // 2)
    return out


@dataclass(frozen=True)
class IdentityPreset:
    name: str
    S: ResidueSystem
    T: ResidueSystem
    m: int
    N0: int
    p_exponent: int
    k: Optional[int] = None
    S_k_count: Optional[int] = None

    def __post_init__(self):
        if self.S.C != self.T.C:
            raise ValueError("S and T systems must share moduli")
        expected = max(self.T.zero_count, 1) - max(self.S.zero_count, 1)
        if self.p_exponent != expected:
            raise ValueError(f"p_exponent {self.p_exponent} != {expected}")

    @property
    def factor(self) -> int:
        return 2**self.p_exponent


def _uniform(c, t):
    return (c,) * t


PRESETS = {
    "mod7": IdentityPreset(
        "mod7",
        ResidueSystem(_uniform(14, 4), (1, 3, 5, 7)),
        ResidueSystem(_uniform(14, 4), (0, 2, 4, 6)),
        m=1, N0=1, p_exponent=0,
    ),
    "mod3": IdentityPreset(
        "mod3",
        ResidueSystem(_uniform(6, 4), (1, 1, 3, 3)),
        ResidueSystem(_uniform(6, 4), (0, 0, 2, 2)),
        m=1, N0=1, p_exponent=1,
    ),
    "mod5": IdentityPreset(
        "mod5",
        ResidueSystem((2, 2, 10, 10), (1, 1, 5, 5)),
        ResidueSystem((2, 2, 10, 10), (0, 0, 0, 0)),
        m=3, N0=3, p_exponent=3, k=1, S_k_count=4,
    ),
    "mod11": IdentityPreset(
        "mod11",
        ResidueSystem((2, 22), (1, 11)),
        ResidueSystem((2, 22), (0, 0)),
        m=3, N0=3, p_exponent=1, k=1, S_k_count=2,
    ),
    "mod23": IdentityPreset(
        "mod23",
        ResidueSystem(_uniform(46, 12), tuple(range(1, 24, 2))),
        ResidueSystem(_uniform(46, 12), tuple(range(0, 23, 2))),
        m=3, N0=3, p_exponent=0,
    ),
}


def get_preset(name: str) -> IdentityPreset:
    try:
        return PRESETS[name]
    except KeyError:
        raise KeyError(f"unknown preset {name!r}; choose from {sorted(PRESETS)}") from None


@dataclass
class IdentityRecord:
    N: int
    D_S: int
    D_T: int
    factor: int
    passed: bool
    oracle_agrees: bool = True


@dataclass
class IdentityReport:
    preset: str
    N_min: int
    N_max: int
    records: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed and r.oracle_agrees for r in self.records)

    def failures(self) -> list:
        return [r for r in self.records if not (r.passed and r.oracle_agrees)]


def identity_check(preset: IdentityPreset, N_max: int, method: str = "both") -> IdentityReport:
    """Check D_S(N) = 2^p D_T(N - m) for N0 <= N <= N_max.

    ``method`` picks the counting route: ``"enumeration"`` (memoized
    descent), ``"qseries"`` (truncated products), or ``"both"``, which also
    records whether the two routes agree.
    """
    if N_max < preset.N0:
        raise ValueError(f"N_max must be at least N0={preset.N0}")
    if method not in ("enumeration", "qseries", "both"):
        raise ValueError(f"unknown method {method!r}")
    if method != "enumeration":
        qs = count_D_qseries(preset.S, N_max)
        qt = count_D_qseries(preset.T, N_max)
    report = IdentityReport(preset.name, preset.N0, N_max)
    for N in range(preset.N0, N_max + 1):
        if method == "qseries":
            ds, dt = qs[N], (qt[N - preset.m] if N >= preset.m else 0)
            agree = True
        else:
            ds, dt = count_D(preset.S, N), count_D(preset.T, N - preset.m)
            agree = True
            if method == "both":
                agree = ds == qs[N] and dt == (qt[N - preset.m] if N >= preset.m else 0)
        report.records.append(
            IdentityRecord(N, ds, dt, preset.factor, ds == preset.factor * dt, agree)
        )
    return report


_SYSTEM_RE = re.compile(r"^\s*t\s*=\s*(\d+)\s*;\s*C\s*=\s*([\d,\s]+);\s*A\s*=\s*([\d,\s]+)$")
_PART_RE = re.compile(r"^\s*(\d+)\s*@\s*(\d+)\s*([+-]?)\s*$")


def parse_system(text: str) -> ResidueSystem:
    """Parse ``t=<int>;C=<c1,...>;A=<a1,...>``."""
    m = _SYSTEM_RE.match(text)
    if not m:
        raise ValueError(f"malformed system spec {text!r}")
    t = int(m.group(1))
    C = tuple(int(x) for x in m.group(2).split(",") if x.strip())
    A = tuple(int(x) for x in m.group(3).split(",") if x.strip())
    if len(C) != t or len(A) != t:
        raise ValueError(f"expected {t} moduli and residues in {text!r}")
    return ResidueSystem(C, A)


def parse_colored(text: str, system: Optional[ResidueSystem] = None) -> tuple:
    """Parse ``value@class[+|-]`` tokens separated by commas.

    An empty string (or ``"()"``) is the empty partition.
    """
    text = text.strip()
    if text in ("", "()", "empty"):
        return ()
    parts = []
    for token in text.split(","):
        m = _PART_RE.match(token)
        if not m:
            raise ValueError(f"malformed colored part {token!r}")
        parts.append(ColoredPart(int(m.group(1)), int(m.group(2)), m.group(3) or PLUS))
    out = canonical(parts)
    if system is not None and not is_valid_colored(system, out):
        raise ValueError(f"{text!r} is not a partition into distinct parts of {system.spec()}")
    return out


def format_colored(parts: Sequence) -> str:
    return ",".join(str(ColoredPart(*p)) for p in parts)
