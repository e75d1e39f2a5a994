"""Tuple-level bijections: Kim's map and the degree-5 / degree-11 lattice maps.

Lattice points are stored with doubled coordinates so that half-integers stay
exact: a point is on the d-side when every doubled coordinate is even and on
the e-side when every one is odd.
"""
from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from .colored import IdentityPreset, get_preset
from .master import SolutionTuple, d_contribution, iter_d_vectors
from .partitions import generalized_pentagonal

__all__ = [
    "kim_map",
    "kim_inverse",
    "HalfLatticePoint",
    "LatticeTuple",
    "PentagonalTuple",
    "LatticeConfig",
    "ReflectionFrame",
    "MOD5_FRAME",
    "LATTICE_CONFIGS",
    "d_to_point",
    "e_to_point",
    "point_to_tuple",
    "degree5_map",
    "degree5_inverse",
    "degree11_map",
    "degree11_inverse",
    "pentagonal_value",
    "payload_value",
    "build_U",
    "build_V",
    "uv_bijection",
    "vu_bijection",
]


def kim_map(tup) -> SolutionTuple:
    """Send an LHS tuple of the mod-7/mod-3 equation to its RHS partner."""
    nus, ds = tup
    if len(ds) != 4:
        raise ValueError("Kim's map needs t = 4")
    total = sum(ds)
    if total % 2 == 0:
        raise ValueError(f"d-sum of {tuple(ds)} is even")
    n = ds[3]
    k = ds[1] + ds[3]
    l = ds[2] + ds[3]
    s = (total - 1) // 2
    es = (2 * n + 1 - k - l + s, k - s, l - s, -s)
    return SolutionTuple(tuple(nus), es)


def kim_inverse(tup) -> SolutionTuple:
    nus, es = tup
    if len(es) != 4:
        raise ValueError("Kim's map needs t = 4")
    total = sum(es)
    if total % 2 == 0:
        raise ValueError(f"e-sum of {tuple(es)} is even")
    s = -es[3]
    k = es[1] + s
    l = es[2] + s
    n = (total - 1) // 2 + s
    ds = (2 * s + 1 - k - l + n, k - n, l - n, n)
    return SolutionTuple(tuple(nus), ds)


class HalfLatticePoint(NamedTuple):
    coords2x: tuple
    weights: tuple

    @property
    def side(self) -> str:
        if all(c % 2 == 0 for c in self.coords2x):
            return "d"
        if all(c % 2 == 1 for c in self.coords2x):
            return "e"
        raise ValueError(f"mixed-parity point {self.coords2x}")

    @property
    def value(self) -> int:
        num = sum(w * c * c for w, c in zip(self.weights, self.coords2x))
        if num % 4:
            raise ArithmeticError(f"point {self.coords2x} has non-integral value")
        return num // 4

    def dot2x(self, other) -> int:
        """Weighted dot product with an integer vector, times two."""
        return sum(w * c * v for w, c, v in zip(self.weights, self.coords2x, other))

    def is_valid(self) -> bool:
        try:
            self.side
        except ValueError:
            return False
        total = sum(self.coords2x)
        return total % 2 == 0 and (total // 2) % 2 == 1


class LatticeTuple(NamedTuple):
    kind: str  # "d" for U-side tuples, "e" for V-side tuples
    values: tuple


class PentagonalTuple(NamedTuple):
    f: tuple
    copy: int

    @property
    def parity(self) -> int:
        return sum(self.f) % 2


class LatticeConfig(NamedTuple):
    weights: tuple
    e_signs: tuple  # doubled coordinate i of an e-tuple is e_signs[i] * (1 - 2 e_i)


LATTICE_CONFIGS = {
    "mod5": LatticeConfig((1, 1, 5, 5), (1, 1, 1, 1)),
    "mod11": LatticeConfig((1, 11), (1, -1)),
}


def _config(config) -> LatticeConfig:
    return LATTICE_CONFIGS[config] if isinstance(config, str) else config


def d_to_point(ds, config) -> HalfLatticePoint:
    config = _config(config)
    if sum(ds) % 2 == 0:
        raise ValueError(f"d-sum of {tuple(ds)} is even")
    return HalfLatticePoint(tuple(2 * d for d in ds), config.weights)


def e_to_point(es, config) -> HalfLatticePoint:
    config = _config(config)
    if sum(es) % 2 == 0:
        raise ValueError(f"e-sum of {tuple(es)} is even")
    return HalfLatticePoint(tuple(s * (1 - 2 * e) for s, e in zip(config.e_signs, es)), config.weights)


def point_to_tuple(point: HalfLatticePoint, config) -> LatticeTuple:
    config = _config(config)
    if point.side == "d":
        return LatticeTuple("d", tuple(c // 2 for c in point.coords2x))
    return LatticeTuple("e", tuple((1 - s * c) // 2 for s, c in zip(config.e_signs, point.coords2x)))


class ReflectionFrame:
    """Pairwise orthogonal vectors V_i with |V_i|^2 = 12 M_i."""

    def __init__(self, vectors, weights):
        self.V = tuple(tuple(v) for v in vectors)
        self.weights = tuple(weights)
        for i, u in enumerate(self.V):
            for v in self.V[i + 1:]:
                if self._dot(u, v):
                    raise ValueError(f"{u} and {v} are not orthogonal")
        M = []
        for v in self.V:
            norm = self._dot(v, v)
            if norm % 12:
                raise ValueError(f"|{v}|^2 = {norm} is not a multiple of 12")
            M.append(norm // 12)
        self.M = tuple(M)

    def _dot(self, u, v) -> int:
        return sum(w * a * b for w, a, b in zip(self.weights, u, v))


MOD5_FRAME = ReflectionFrame(
    [(1, 1, 1, 1), (1, -1, 1, -1), (5, 5, -1, -1), (5, -5, -1, 1)], (1, 1, 5, 5)
)

# Copy index (1-based) <-> residual z, doubled.
_MOD5_Z = ((2, 0, 0, 0), (-2, 0, 0, 0), (0, 2, 0, 0), (0, -2, 0, 0))


def degree5_map(point: HalfLatticePoint, frame: ReflectionFrame = MOD5_FRAME):
    """Reflect ``point`` or send it to a copy of a pentagonal tuple.

    With s_i = d . V_i: if some s_i / M_i is divisible by 3, the smallest such
    i gives the reflection d - s_i / (6 M_i) V_i.  Otherwise
    d = z + sum (x_i / 2) V_i with x_i the nearest integer to s_i / (6 M_i),
    and the result is the tuple f_i = -x_i y_i, y_i = s_i / M_i - 6 x_i, in
    the copy labelled by z.
    """
    c = point.coords2x
    quotients = []
    for v, m in zip(frame.V, frame.M):
        s2 = point.dot2x(v)  # 2 s_i
        if s2 % (2 * m):
            raise ArithmeticError(f"d.V = {s2}/2 is not a multiple of {m}")
        q = s2 // (2 * m)
        if q % 2 == 0:
            raise ArithmeticError(f"d.V / M = {q} is even")
        quotients.append(q)
    for v, m, q in zip(frame.V, frame.M, quotients):
        if q % 3 == 0:
            step = q // 3  # 2 * s_i / (6 M_i)
            return HalfLatticePoint(tuple(a - step * b for a, b in zip(c, v)), point.weights)
    xs, ys = [], []
    for q in quotients:
        if q % 6 == 1:
            x, y = (q - 1) // 6, 1
        else:
            x, y = (q + 1) // 6, -1
        xs.append(x)
        ys.append(y)
    z = list(c)
    for x, v in zip(xs, frame.V):
        for j in range(len(z)):
            z[j] -= x * v[j]
    z = tuple(z)
    if z not in _MOD5_Z:
        raise ArithmeticError(f"residual {z} (doubled) is not one of the four unit vectors")
    return PentagonalTuple(tuple(-x * y for x, y in zip(xs, ys)), _MOD5_Z.index(z) + 1)


def degree5_inverse(result, frame: ReflectionFrame = MOD5_FRAME) -> HalfLatticePoint:
    if isinstance(result, HalfLatticePoint):
        out = degree5_map(result, frame)
        if not isinstance(out, HalfLatticePoint):
            raise ValueError(f"{result} is not a reflected point")
        return out
    f, copy = result
    if not 1 <= copy <= len(_MOD5_Z):
        raise ValueError(f"copy index {copy} out of range")
    z = _MOD5_Z[copy - 1]
    zpoint = HalfLatticePoint(z, frame.weights)
    d = list(z)
    for fi, v, m in zip(f, frame.V, frame.M):
        y = zpoint.dot2x(v) // (2 * m)
        x = -y * fi
        for j in range(len(d)):
            d[j] += x * v[j]
    return HalfLatticePoint(tuple(d), frame.weights)


_MOD11_WEIGHTS = (1, 11)


def _d_plus2x(f) -> tuple:
    """Canonical representative d+(f), doubled."""
    f1, f2 = f
    return (-f1 - 11 * f2 + 2, f1 - f2)


def degree11_map(point: HalfLatticePoint):
    """Reflect a mod-11 point, or send it to copy 1 / 2 of a pentagonal pair."""
    c1, c2 = point.coords2x
    if (c1 + c2) % 2:
        raise ValueError(f"invalid mod-11 point {point.coords2x}")
    sigma = (c1 + c2) // 2
    if sigma % 2 == 0:
        raise ValueError(f"coordinate sum {sigma} of {point.coords2x} is even")
    if sigma % 3 == 0:
        k = sigma // 3
        return HalfLatticePoint((c1 - 11 * k, c2 - k), point.weights)
    x = (sigma - 1) // 6 if sigma % 6 == 1 else (sigma + 1) // 6
    p1, p2 = c1 - 11 * x, c2 - x
    eps = (p1 + p2) // 2
    if eps not in (1, -1):
        raise ArithmeticError(f"residual sum {eps} is not +-1")
    y = -p2
    if p1 != y + 2 * eps:
        raise ArithmeticError("residual does not have the form (y/2 +- 1, -y/2)")
    f = (-eps * y, -eps * x)
    rep = _d_plus2x(f)
    if (c1, c2) == rep:
        copy = 1
    elif (c1, c2) == (-rep[0], -rep[1]):
        copy = 2
    else:
        raise ArithmeticError(f"{point.coords2x} matches neither representative of {f}")
    return PentagonalTuple(f, copy)


def degree11_inverse(result) -> HalfLatticePoint:
    if isinstance(result, HalfLatticePoint):
        out = degree11_map(result)
        if not isinstance(out, HalfLatticePoint):
            raise ValueError(f"{result} is not a reflected point")
        return out
    f, copy = result
    rep = _d_plus2x(f)
    if copy == 1:
        return HalfLatticePoint(rep, _MOD11_WEIGHTS)
    if copy == 2:
        return HalfLatticePoint((-rep[0], -rep[1]), _MOD11_WEIGHTS)
    raise ValueError(f"copy index {copy} out of range")


_LATTICE_MAPS = {
    "mod5": (degree5_map, degree5_inverse),
    "mod11": (degree11_map, degree11_inverse),
}


def _preset(preset) -> IdentityPreset:
    return get_preset(preset) if isinstance(preset, str) else preset


def _lattice(preset):
    preset = _preset(preset)
    if preset.name not in _LATTICE_MAPS:
        raise ValueError(f"no lattice bijection for preset {preset.name!r}")
    return preset, LATTICE_CONFIGS[preset.name], _LATTICE_MAPS[preset.name]


def pentagonal_value(preset, f) -> int:
    preset = _preset(preset)
    return sum(c * generalized_pentagonal(x) for c, x in zip(preset.S.C, f)) + preset.k


def payload_value(preset, payload) -> int:
    """Value of a U/V element: d-tuples on S, e-tuples on T plus m, f-tuples plus k."""
    preset = _preset(preset)
    if isinstance(payload, PentagonalTuple):
        return pentagonal_value(preset, payload.f)
    kind, values = payload
    system = preset.S if kind == "d" else preset.T
    total = sum(d_contribution(c, a, v) for c, a, v in zip(system.C, system.A, values))
    return total + (preset.m if kind == "e" else 0)


def _pent_contribution(c: int, _a: int, f: int) -> int:
    return c * generalized_pentagonal(f)


def _pentagonal_tuples(preset: IdentityPreset, N: int, parity: int) -> list[PentagonalTuple]:
    budget = N - preset.k
    if budget < 0:
        return []
    out = []
    for f, q in iter_d_vectors(preset.S.C, preset.S.A, budget, _pent_contribution):
        if q == budget and sum(f) % 2 == parity:
            out.extend(PentagonalTuple(f, copy) for copy in range(1, preset.S_k_count + 1))
    return out


def _lattice_tuples(system, N: int, kind: str) -> list[LatticeTuple]:
    if N < 0:
        return []
    return [
        LatticeTuple(kind, ds)
        for ds, q in iter_d_vectors(system.C, system.A, N)
        if q == N and sum(ds) % 2 == 1
    ]


def build_U(preset, N: int) -> list:
    """d-tuples of value N plus |S_k| copies of odd-sum pentagonal tuples."""
    preset, _, _ = _lattice(preset)
    return _lattice_tuples(preset.S, N, "d") + _pentagonal_tuples(preset, N, 1)


def build_V(preset, N: int) -> list:
    """e-tuples of value N (m included) plus |S_k| copies of even-sum pentagonal tuples."""
    preset, _, _ = _lattice(preset)
    return _lattice_tuples(preset.T, N - preset.m, "e") + _pentagonal_tuples(preset, N, 0)


def uv_bijection(preset, u):
    """Map an element of U_N to its partner in V_N (same value)."""
    return _uv(_preset(preset).name, u)


def vu_bijection(preset, v):
    """Inverse of :func:`uv_bijection`."""
    return _vu(_preset(preset).name, v)


# Payload maps only see the small set of d/e/f vectors, so caching pays off.
@lru_cache(maxsize=1 << 16)
def _uv(preset, u):
    preset, config, (forward, inverse) = _lattice(preset)
    if isinstance(u, PentagonalTuple):
        if u.parity != 1:
            raise ValueError(f"{u} has an even sum and lies in V, not U")
        point = inverse(u)
        if point.side != "e":
            raise ArithmeticError(f"odd tuple {u} did not come from an e-point")
        return point_to_tuple(point, config)
    if u.kind != "d":
        raise ValueError(f"{u} is an e-tuple and lies in V, not U")
    image = forward(d_to_point(u.values, config))
    if isinstance(image, PentagonalTuple):
        if image.parity != 0:
            raise ArithmeticError(f"d-point {u} mapped to odd tuple {image}")
        return image
    if image.side != "e":
        raise ArithmeticError(f"reflection of {u} stayed on the d-side")
    return point_to_tuple(image, config)


@lru_cache(maxsize=1 << 16)
def _vu(preset, v):
    preset, config, (forward, inverse) = _lattice(preset)
    if isinstance(v, PentagonalTuple):
        if v.parity != 0:
            raise ValueError(f"{v} has an odd sum and lies in U, not V")
        point = inverse(v)
        if point.side != "d":
            raise ArithmeticError(f"even tuple {v} did not come from a d-point")
        return point_to_tuple(point, config)
    if v.kind != "e":
        raise ValueError(f"{v} is a d-tuple and lies in U, not V")
    image = forward(e_to_point(v.values, config))
    if isinstance(image, PentagonalTuple):
        if image.parity != 1:
            raise ArithmeticError(f"e-point {v} mapped to even tuple {image}")
        return image
    if image.side != "d":
        raise ArithmeticError(f"reflection of {v} stayed on the e-side")
    return point_to_tuple(image, config)
